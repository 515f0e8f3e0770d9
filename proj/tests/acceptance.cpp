// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cli.hpp"
#include "oracles.hpp"
#include "scindex/analytics.hpp"
#include "scindex/dim_expr.hpp"
#include "scindex/errors.hpp"
#include "scindex/scaling.hpp"
#include "scindex/table1.hpp"

namespace {

using namespace scindex;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string note) {
    if (!ok) {
      pass = false;
      notes.push_back(std::move(note));
    }
  }
};

// 1. C within ±1, z within ±1 %, i_E within ±2 % of the printed values.
Outcome table1_identities() {
  Outcome o;
  for (const auto& row : table1::rows()) {
    const IndicatorReport r = reconstruct_from_summary(row.papers, row.impact, row.eta);
    const double c = r.at("C").magnitude();
    const double z = r.at("z").magnitude();
    const double ie = r.at("i_E").magnitude();
    o.require(std::abs(c - row.c) <= 1.0, fmt::format("{}: C {:.2f} vs {}", row.author, c, row.c));
    o.require(std::abs(z - row.z) <= 0.01 * row.z, fmt::format("{}: z {:.3f} vs {}", row.author, z, row.z));
    o.require(std::abs(ie - row.i_e) <= 0.02 * row.i_e,
              fmt::format("{}: i_E {:.2f} vs {}", row.author, ie, row.i_e));
  }
  return o;
}

// 2. Every coefficient of the printed correlation block within ±0.02.
Outcome table1_correlations() {
  Outcome o;
  const auto& cols = table1::columns();
  const CorrelationMatrix m = pearson_matrix(table1::printed(), cols);
  const auto& printed = table1::printed_correlations();
  for (std::size_t a = 0; a < cols.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      const double want = printed[a * cols.size() + b];
      o.require(std::abs(m.at(a, b) - want) <= 0.02,
                fmt::format("corr({},{}) = {:.4f} vs printed {:.2f}", cols[a], cols[b], m.at(a, b), want));
    }
  }
  return o;
}

// 3. Dimension row from the defining formulas.
Outcome dimension_table() {
  Outcome o;
  SymbolTable s{{"P", Dimension::papers(1)}, {"i", Dimension::papers(1)}, {"E", Dimension::papers(3)}};
  s.emplace("C", eval_dim_expr(parse_dim_expr("i*P"), s));
  s.emplace("X", eval_dim_expr(parse_dim_expr("i^2*P"), s));
  const std::vector<std::pair<std::string, std::string>> cases{
      {"i*P", "[P^2]"}, {"C/P", "[P]"}, {"X/E", "dimensionless"},
      {"(X/E*i^2*P)^(1/3)", "[P]"}, {"E^(1/2)", "[P^3/2]"}};
  for (const auto& [formula, want] : cases) {
    const std::string got = eval_dim_expr(parse_dim_expr(formula), s).to_string();
    o.require(got == want, fmt::format("{} -> {} (want {})", formula, got, want));
  }
  return o;
}

// 4. Replication slopes for every registered indicator.
Outcome figure1_slopes() {
  Outcome o;
  std::vector<std::pair<std::string, CitationVector>> bases{
      {"[4,2,1]", CitationVector{4, 2, 1}}, {"[10,5,3,2,1]", CitationVector{10, 5, 3, 2, 1}}};
  std::mt19937_64 rng(4);
  for (int n = 0; n < 100; ++n) {
    bases.emplace_back(fmt::format("random#{}", n),
                       CitationVector{testing::random_nonzero_counts(rng, 50, 1000)});
  }
  for (const auto& [label, base] : bases) {
    for (const auto& d : indicator_registry()) {
      const ProbeResult r = verify_dimension(d, base, kDefaultLambdas);
      if (!r.pass) {
        o.require(false, fmt::format("{} on {}: slope {:.6f}, declared {}, tolerance {}", r.name, label,
                                     r.fit->slope, r.declared_dim.exponent().to_double(), r.tolerance));
      }
    }
  }
  return o;
}

// 5. h and g against brute-force scans.
Outcome oracle_equivalence() {
  Outcome o;
  std::size_t mismatches = 0;
  std::size_t exhaustive = 0;
  testing::for_each_vector(8, 8, [&](const std::vector<std::uint64_t>& v) {
    const CitationVector cv{v};
    ++exhaustive;
    if (h_index(cv).magnitude() != static_cast<double>(testing::brute_h(v)) ||
        g_index(cv).magnitude() != static_cast<double>(testing::brute_g(v))) {
      if (++mismatches <= 5) o.require(false, fmt::format("mismatch on vector of length {}", v.size()));
    }
  });
  o.require(exhaustive == 48427560, fmt::format("enumerated {} vectors", exhaustive));
  std::mt19937_64 rng(5);
  for (int n = 0; n < 10000; ++n) {
    const auto v = testing::random_counts(rng, 200, 10000);
    const CitationVector cv{v};
    if (h_index(cv).magnitude() != static_cast<double>(testing::brute_h(v)) ||
        g_index(cv).magnitude() != static_cast<double>(testing::brute_g(v))) {
      if (++mismatches <= 5) o.require(false, fmt::format("random mismatch #{}", n));
    }
  }
  o.require(mismatches == 0, fmt::format("{} mismatches", mismatches));
  return o;
}

// 6. Property suite over random vectors.
Outcome invariant_suite() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::size_t failures = 0;
  const auto check = [&](bool ok, const std::string& what) {
    if (!ok && ++failures <= 5) o.require(false, what);
  };
  for (int n = 0; n < 10000; ++n) {
    auto v = testing::random_counts(rng, 120, n % 3 == 0 ? 4 : 5000);
    const IndicatorReport r = compute_all(CitationVector{v});
    std::shuffle(v.begin(), v.end(), rng);
    const IndicatorReport p = compute_all(CitationVector{v});
    for (const auto& [name, q] : r) check(q.magnitude() == p.at(name).magnitude(), "permutation " + name);

    const double eta = r.at("eta").magnitude();
    const double S = r.at("S").magnitude();
    const double X = r.at("X").magnitude();
    const double E = r.at("E").magnitude();
    const double z = r.at("z").magnitude();
    check(eta > 0.0 && eta <= 1.0, fmt::format("eta = {}", eta));
    check(S >= 0.0, fmt::format("S = {}", S));
    check(X <= E, fmt::format("X {} > E {}", X, E));
    check((S == 0.0) == (eta == 1.0), fmt::format("S = {} but eta = {}", S, eta));
    if (E > 0) check(testing::rel_close(z * z * z * E, X * X, 1e-9), "z^3 E != X^2");

    // Every ordered pair of differently dimensioned indicators must refuse add and compare.
    for (const auto& [a, qa] : r) {
      for (const auto& [b, qb] : r) {
        if (qa.dim() == qb.dim()) continue;
        bool add_threw = false;
        bool cmp_threw = false;
        try {
          (void)qty_add(qa, qb);
        } catch (const HeterogeneityError&) {
          add_threw = true;
        }
        try {
          (void)qty_compare(qa, qb);
        } catch (const HeterogeneityError&) {
          cmp_threw = true;
        }
        check(add_threw && cmp_threw, "mixed " + a + " / " + b + " accepted");
      }
    }
  }
  o.require(failures == 0, fmt::format("{} invariant failures", failures));
  return o;
}

// 7. CLI contract.
Outcome cli_contract() {
  Outcome o;
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run_cli({"dims", "i_E + h"}, in, out, err);
  o.require(code == 1, fmt::format("dims exit code {}", code));
  o.require(err.str().find("homogeneity") != std::string::npos, "no homogeneity message: " + err.str());

  std::ostringstream t_out, t_err;
  const int t_code = cli::run_cli({"table1"}, in, t_out, t_err);
  o.require(t_code == 0, fmt::format("table1 exit code {}", t_code));
  std::istringstream lines(t_out.str());
  std::string header, dims;
  std::getline(lines, header);
  std::getline(lines, dims);
  const std::string want = "Dimensions\t[P]\t[P]\tdimensionless\t[P]\t[P]\t[P^3/2]\t[P^2]";
  o.require(dims == want, "dimension row '" + dims + "'");
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  double budget_seconds;  // 0 = no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Table 1 identity reproduction (C ±1, z ±1%, i_E ±2%)", table1_identities, 1.0},
      {2, "Correlation block reproduction (±0.02)", table1_correlations, 1.0},
      {3, "Dimension table from formulas (exact)", dimension_table, 0.0},
      {4, "Replication slopes for all indicators (1e-6; g 0.05)", figure1_slopes, 5.0},
      {5, "h/g oracle equivalence (exhaustive P,c<=8 + 10,000 random)", oracle_equivalence, 0.0},
      {6, "Invariant suite over 10,000 random cases", invariant_suite, 0.0},
      {7, "CLI contract (dims exit 1, table1 dimension row)", cli_contract, 0.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      o.require(false, fmt::format("runtime {:.2f}s exceeds {:.0f}s budget", seconds, c.budget_seconds));
    }
    std::cout << fmt::format("[{}] criterion {}: {} ({:.3f}s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                             seconds);
    for (const auto& note : o.notes) std::cout << "       - " << note << '\n';
    if (!o.pass) ++failed;
  }
  std::cout << fmt::format("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
