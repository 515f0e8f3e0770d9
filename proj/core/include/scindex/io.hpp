#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scindex/analytics.hpp"

namespace scindex {

enum class InputFormat { Csv, Json };
enum class TableFormat { Tsv, Csv, Json };

/// Reads portfolios from CSV or JSON.
///
/// CSV is auto-detected from the header, which must be exactly one of
///   author,citations        wide form, counts ';'-separated inside the cell
///   author,P,i,eta[,h]      summary form
/// JSON is an array of objects, either {"author", "citations": [...]} or
/// {"author", "P", "i", "eta"[, "h"]}. Mixing the two forms is rejected.
///
/// Throws FormatError / NegativeCountError carrying the 1-based line (CSV) or
/// record number (JSON).
std::vector<PortfolioSummary> parse_input(std::string_view bytes, InputFormat format);

/// Writes portfolios back out as CSV in the same forms parse_input accepts.
/// All portfolios must share a form (FormatError otherwise).
std::string emit_input_csv(std::span<const PortfolioSummary> portfolios);

/// Decimal places for reals; std::nullopt means shortest round-trip digits.
using Precision = std::optional<int>;
inline constexpr int kDefaultPrecision = 2;

/// Renders a table: a header row of indicator names, a row of dimensions
/// (`[P]`, `[P^3/2]`, `dimensionless`, ...) and one row per portfolio.
/// Integral indicators (P, C, h, g) print without decimals when exact.
/// JSON output is an array of objects holding value, dimension and a
/// reconstructed flag per cell, always at full precision.
std::string emit_table(const AnalyticsTable& table, TableFormat format,
                       Precision precision = kDefaultPrecision);

/// Renders a correlation matrix as a TSV/CSV block or a JSON object.
std::string emit_correlations(const CorrelationMatrix& m, TableFormat format,
                              Precision precision = kDefaultPrecision);

struct PlotSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct PlotOutput {
  std::string svg;
  /// series,x,y rows backing the plot.
  std::string csv;
};

/// Log-log scatter with one marker shape per series, fitted lines and slope
/// labels. Throws NonPositivePointError for any coordinate <= 0 and
/// propagates DegenerateSeriesError from the fit.
PlotOutput emit_loglog_svg(std::span<const PlotSeries> series);

/// Formats one magnitude the way emit_table does.
std::string format_value(double value, bool integral, Precision precision);

}  // namespace scindex
