#include "scindex/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "scindex/errors.hpp"

namespace scindex {

IndicatorReport reconstruct_from_summary(std::uint64_t papers, double impact, double eta) {
  if (papers < 1) throw DomainError("summary requires P >= 1");
  if (!std::isfinite(impact) || impact < 0.0) {
    throw DomainError(fmt::format("summary impact i must be >= 0, got {}", impact));
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw DomainError(fmt::format("summary eta must lie in (0, 1], got {}", eta));
  }
  const double p = static_cast<double>(papers);
  const Quantity P{p, Dimension::papers(1)};
  const Quantity i{impact, Dimension::papers(1)};
  const Quantity eta_q{eta, Dimension::dimensionless()};

  const Quantity C = i * P;
  const Quantity X = i * C;
  const Quantity E = X / eta_q;
  const Quantity S = E - X;

  IndicatorReport r;
  r.emplace("P", P);
  r.emplace("i", i);
  r.emplace("eta", eta_q);
  r.emplace("C", C);
  r.emplace("X", X);
  r.emplace("E", E);
  r.emplace("S", S);
  r.emplace("i_E", qty_pow(E, Rational{1, 2}));
  r.emplace("z", qty_pow(eta_q * X, Rational{1, 3}));
  return r;
}

const std::set<std::string, std::less<>>& reconstructed_names() {
  static const std::set<std::string, std::less<>> names{"C", "X", "E", "S", "i_E", "z"};
  return names;
}

void AnalyticsTable::add_row(TableRow row) {
  TableRow kept;
  kept.label = std::move(row.label);
  std::vector<Dimension> dims;
  for (const auto& name : columns_) {
    auto it = row.values.find(name);
    if (it == row.values.end()) {
      throw UnknownIndicatorError(name + " (missing from row '" + kept.label + "')");
    }
    dims.push_back(it->second.dim());
    kept.values.emplace(name, it->second);
    if (row.reconstructed.contains(name)) kept.reconstructed.insert(name);
  }
  if (rows_.empty()) {
    dims_ = std::move(dims);
  } else if (dims != dims_) {
    throw HeterogeneityError("row '" + kept.label + "' disagrees with the table's column dimensions");
  }
  rows_.push_back(std::move(kept));
}

std::vector<double> AnalyticsTable::column(std::string_view name) const {
  if (std::find(columns_.begin(), columns_.end(), name) == columns_.end()) {
    throw UnknownIndicatorError(std::string(name));
  }
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row.values.find(name)->second.magnitude());
  return out;
}

const Dimension& AnalyticsTable::column_dim(std::string_view name) const {
  auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw UnknownIndicatorError(std::string(name));
  if (dims_.empty()) return find_indicator(name).declared_dim;
  return dims_[static_cast<std::size_t>(it - columns_.begin())];
}

TableRow build_row(const PortfolioSummary& portfolio) {
  TableRow row;
  row.label = portfolio.label;
  if (const auto* v = std::get_if<CitationVector>(&portfolio.source)) {
    row.values = compute_all(*v);
    return row;
  }
  const auto& s = std::get<SummaryTriple>(portfolio.source);
  row.values = reconstruct_from_summary(s.papers, s.impact, s.eta);
  row.reconstructed = reconstructed_names();
  if (s.h) row.values.emplace("h", Quantity{*s.h, Dimension::papers(1)});
  return row;
}

std::vector<std::string> common_columns(const std::vector<TableRow>& rows) {
  std::vector<std::string> out;
  for (const auto& d : indicator_registry()) {
    const bool everywhere = std::all_of(rows.begin(), rows.end(), [&](const TableRow& r) {
      return r.values.contains(d.name);
    });
    if (everywhere) out.emplace_back(d.name);
  }
  return out;
}

double CorrelationMatrix::at(std::string_view a, std::string_view b) const {
  const auto index = [&](std::string_view n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw UnknownIndicatorError(std::string(n));
    return static_cast<std::size_t>(it - names.begin());
  };
  return at(index(a), index(b));
}

CorrelationMatrix pearson_matrix(const AnalyticsTable& table, const std::vector<std::string>& columns) {
  if (table.rows().size() < 3) {
    throw DomainError(fmt::format("correlation needs at least 3 rows, got {}", table.rows().size()));
  }
  // Centre each column and keep its root sum of squared deviations.
  std::vector<std::vector<double>> centred;
  std::vector<double> norms;
  for (const auto& name : columns) {
    std::vector<double> col = table.column(name);
    const double mean = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(col.size());
    double ss = 0.0;
    for (double& x : col) {
      x -= mean;
      ss += x * x;
    }
    if (ss == 0.0) throw ZeroVarianceError(name);
    centred.push_back(std::move(col));
    norms.push_back(std::sqrt(ss));
  }

  CorrelationMatrix m;
  m.names = columns;
  const std::size_t n = columns.size();
  m.values.assign(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    m.values[a * n + a] = 1.0;
    for (std::size_t b = a + 1; b < n; ++b) {
      const double cov =
          std::inner_product(centred[a].begin(), centred[a].end(), centred[b].begin(), 0.0);
      const double r = std::clamp(cov / (norms[a] * norms[b]), -1.0, 1.0);
      m.values[a * n + b] = r;
      m.values[b * n + a] = r;
    }
  }
  return m;
}

std::vector<std::string> rank_by(const AnalyticsTable& table, std::string_view indicator) {
  const std::vector<double> values = table.column(indicator);
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  const auto& rows = table.rows();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return rows[a].label < rows[b].label;
  });
  std::vector<std::string> labels;
  labels.reserve(order.size());
  for (std::size_t k : order) labels.push_back(rows[k].label);
  return labels;
}

}  // namespace scindex
