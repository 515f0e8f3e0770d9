#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scindex/indicators.hpp"

namespace scindex {

/// Published summary of a portfolio whose raw citation counts are unknown.
struct SummaryTriple {
  std::uint64_t papers = 0;  // P
  double impact = 0.0;       // i
  double eta = 0.0;
  /// h cannot be derived from (P, i, eta); carried through when published.
  std::optional<double> h;
};

struct PortfolioSummary {
  std::string label;
  std::variant<CitationVector, SummaryTriple> source;
};

/// Derives P, i, eta, C = iP, X = i²P, E = X/eta, S = E - X, i_E = sqrt(E) and
/// z = (eta i² P)^(1/3). Throws DomainError unless P >= 1, i >= 0 and 0 < eta <= 1.
IndicatorReport reconstruct_from_summary(std::uint64_t papers, double impact, double eta);

/// Names reconstruct_from_summary derives rather than copies from its input.
const std::set<std::string, std::less<>>& reconstructed_names();

struct TableRow {
  std::string label;
  IndicatorReport values;
  /// Cells derived from a summary rather than computed from raw counts.
  std::set<std::string, std::less<>> reconstructed;
};

/// Labelled rows sharing one ordered column set.
class AnalyticsTable {
 public:
  explicit AnalyticsTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  /// Keeps only this table's columns. Throws UnknownIndicatorError if the row lacks one.
  void add_row(TableRow row);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<TableRow>& rows() const noexcept { return rows_; }

  /// Column magnitudes in row order. Throws UnknownIndicatorError.
  std::vector<double> column(std::string_view name) const;
  const Dimension& column_dim(std::string_view name) const;

 private:
  std::vector<std::string> columns_;
  std::vector<TableRow> rows_;
  std::vector<Dimension> dims_;
};

/// Raw vectors go through compute_all; summaries through reconstruct_from_summary
/// (plus the published h when present).
TableRow build_row(const PortfolioSummary& portfolio);

/// Columns shared by every row, in registry order.
std::vector<std::string> common_columns(const std::vector<TableRow>& rows);

struct CorrelationMatrix {
  std::vector<std::string> names;
  std::vector<double> values;  // row-major, names.size()²

  double at(std::size_t r, std::size_t c) const { return values[r * names.size() + c]; }
  double at(std::string_view a, std::string_view b) const;
};

/// Pearson coefficients between the selected columns. Needs >= 3 rows
/// (DomainError); a constant column raises ZeroVarianceError.
CorrelationMatrix pearson_matrix(const AnalyticsTable& table, const std::vector<std::string>& columns);

/// Labels by descending magnitude of the indicator; ties in label order.
std::vector<std::string> rank_by(const AnalyticsTable& table, std::string_view indicator);

}  // namespace scindex
