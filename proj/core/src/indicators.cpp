#include "scindex/indicators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "scindex/errors.hpp"

namespace scindex {
namespace {

using U128 = unsigned __int128;

// Counts above 2^53 would lose exactness once converted to double.
constexpr std::uint64_t kMaxCount = std::uint64_t{1} << 53;

const Dimension kP = Dimension::papers(1);
const Dimension kP2 = Dimension::papers(2);
const Dimension kP3 = Dimension::papers(3);
const Dimension kP32 = Dimension::papers(3, 2);
const Dimension kNone = Dimension::dimensionless();

void require_nonempty(const CitationVector& v) {
  if (v.empty()) throw EmptyPortfolioError{};
}

// Exact sums: P, C = Σc and E = Σc², plus whether C² and P·E fit in 128 bits.
struct Moments {
  U128 p = 0;
  U128 c = 0;
  U128 e = 0;
  bool exact = true;
};

Moments moments(const CitationVector& v) {
  require_nonempty(v);
  Moments m;
  m.p = v.size();
  for (std::uint64_t c : v.counts()) {
    const U128 sq = U128{c} * c;
    if (__builtin_add_overflow(m.c, U128{c}, &m.c) || __builtin_add_overflow(m.e, sq, &m.e)) {
      throw DomainError("citation totals overflow 128-bit accumulation");
    }
  }
  U128 tmp;
  m.exact = !__builtin_mul_overflow(m.c, m.c, &tmp) && !__builtin_mul_overflow(m.p, m.e, &tmp);
  return m;
}

double to_double(U128 x) { return static_cast<double>(x); }

// X = C²/P as q + r/P so the integer part is never rounded before division.
double exergy_value(const Moments& m) {
  if (!m.exact) return static_cast<double>(static_cast<long double>(m.c) * m.c / m.p);
  const U128 c2 = m.c * m.c;
  return to_double(c2 / m.p) + to_double(c2 % m.p) / to_double(m.p);
}

double eta_value(const Moments& m) {
  if (m.e == 0) return 1.0;
  if (m.exact) {
    const U128 c2 = m.c * m.c;
    const U128 pe = m.p * m.e;
    if (c2 == pe) return 1.0;
    const double r = static_cast<double>(static_cast<long double>(c2) / static_cast<long double>(pe));
    return r >= 1.0 ? std::nextafter(1.0, 0.0) : r;
  }
  const long double x = static_cast<long double>(m.c) * m.c / m.p;
  return static_cast<double>(std::min<long double>(x / m.e, 1.0L));
}

const std::array<IndicatorDescriptor, 11> kRegistry{{
    {"P", Dimension::papers(1), &paper_count, true},
    {"C", Dimension::papers(2), &total_citations, true},
    {"i", Dimension::papers(1), &mean_impact, false},
    {"h", Dimension::papers(1), &h_index, true},
    {"g", Dimension::papers(1), &g_index, true},
    {"X", Dimension::papers(3), &exergy, false},
    {"E", Dimension::papers(3), &energy, true},
    {"S", Dimension::papers(3), &entropy_term, false},
    {"eta", Dimension::dimensionless(), &consistency, false},
    {"z", Dimension::papers(1), &z_index, false},
    {"i_E", Dimension::papers(3, 2), &euclidean_index, false},
}};

}  // namespace

CitationVector::CitationVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  for (std::uint64_t c : counts_) {
    if (c > kMaxCount) throw DomainError("citation count exceeds 2^53: " + std::to_string(c));
  }
  std::sort(counts_.begin(), counts_.end(), std::greater<>{});
}

Quantity paper_count(const CitationVector& v) {
  require_nonempty(v);
  return Quantity{static_cast<double>(v.size()), kP};
}

Quantity total_citations(const CitationVector& v) { return Quantity{to_double(moments(v).c), kP2}; }

Quantity mean_impact(const CitationVector& v) {
  const Moments m = moments(v);
  return Quantity{to_double(m.c) / to_double(m.p), kP};
}

Quantity h_index(const CitationVector& v) {
  require_nonempty(v);
  std::uint64_t h = 0;
  for (std::uint64_t c : v.counts()) {
    if (c < h + 1) break;
    ++h;
  }
  return Quantity{static_cast<double>(h), kP};
}

Quantity g_index(const CitationVector& v) {
  require_nonempty(v);
  // The top-k mean is non-increasing in k, so Σ_{j<=k} c_j >= k² holds on a prefix.
  U128 cumulative = 0;
  std::uint64_t g = 0;
  for (std::uint64_t c : v.counts()) {
    cumulative += c;
    const U128 k = g + 1;
    if (cumulative < k * k) break;
    ++g;
  }
  return Quantity{static_cast<double>(g), kP};
}

Quantity energy(const CitationVector& v) { return Quantity{to_double(moments(v).e), kP3}; }

Quantity exergy(const CitationVector& v) { return Quantity{exergy_value(moments(v)), kP3}; }

Quantity entropy_term(const CitationVector& v) {
  const Moments m = moments(v);
  if (m.exact) {
    // S = E - X = (P·E - C²)/P, evaluated without cancellation.
    const U128 num = m.p * m.e - m.c * m.c;
    return Quantity{to_double(num / m.p) + to_double(num % m.p) / to_double(m.p), kP3};
  }
  const long double mean = static_cast<long double>(m.c) / m.p;
  long double s = 0;
  for (std::uint64_t c : v.counts()) s += (c - mean) * (c - mean);
  return Quantity{static_cast<double>(s), kP3};
}

Quantity consistency(const CitationVector& v) { return Quantity{eta_value(moments(v)), kNone}; }

Quantity z_index(const CitationVector& v) {
  const Moments m = moments(v);
  // (eta i² P)^(1/3) = (eta X)^(1/3); finite for the zero vector where X/E is 0/0.
  return Quantity{std::cbrt(eta_value(m) * exergy_value(m)), kP};
}

Quantity euclidean_index(const CitationVector& v) {
  return Quantity{std::sqrt(to_double(moments(v).e)), kP32};
}

std::span<const IndicatorDescriptor> indicator_registry() { return kRegistry; }

const IndicatorDescriptor& find_indicator(std::string_view name) {
  for (const auto& d : kRegistry) {
    if (d.name == name) return d;
  }
  throw UnknownIndicatorError(std::string(name));
}

SymbolTable indicator_symbols() {
  SymbolTable table;
  for (const auto& d : kRegistry) table.emplace(std::string(d.name), d.declared_dim);
  return table;
}

IndicatorReport compute_all(const CitationVector& v) {
  require_nonempty(v);
  IndicatorReport report;
  for (const auto& d : kRegistry) {
    Quantity q = d.compute(v);
    if (q.dim() != d.declared_dim) {
      throw std::logic_error("indicator " + std::string(d.name) + " returned " + q.dim().to_string() +
                             " but declares " + d.declared_dim.to_string());
    }
    report.emplace(std::string(d.name), q);
  }
  return report;
}

}  // namespace scindex
