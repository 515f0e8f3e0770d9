#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scindex/indicators.hpp"

namespace scindex {

/// Indicator magnitudes observed at a sequence of replication factors.
struct ScaleSeries {
  std::vector<std::uint64_t> lambdas;
  std::vector<double> values;
};

struct ExponentEstimate {
  double slope = 0.0;
  double intercept = 0.0;
  /// max |log(value) - (intercept + slope * log(x))| over the fitted points.
  double max_residual = 0.0;
};

/// Each paper is copied lambda times and each copy receives lambda times the
/// citations: P -> lambda P, c_k -> lambda c_k. Throws DomainError for lambda = 0
/// and EmptyPortfolioError for an empty base.
CitationVector replicate_scale(const CitationVector& v, std::uint64_t lambda);

/// OLS fit of log(value) against log(lambda). Throws DegenerateSeriesError for
/// fewer than 3 points, mismatched lengths, non-increasing lambdas or any value <= 0.
ExponentEstimate loglog_fit(const ScaleSeries& series);

/// Same fit over arbitrary positive abscissae.
ExponentEstimate loglog_fit(std::span<const double> x, std::span<const double> y);

/// 1e-6 for indicators that scale exactly under replication, 0.05 for g.
double default_tolerance(std::string_view indicator);

inline const std::vector<std::uint64_t> kDefaultLambdas{1, 2, 3, 4, 5};

struct ProbeResult {
  std::string name;
  Dimension declared_dim;
  ScaleSeries series;
  /// Absent when the indicator is exactly zero at every scale.
  std::optional<ExponentEstimate> fit;
  bool exactly_zero = false;
  double tolerance = 0.0;
  bool pass = false;

  /// One-line human summary, e.g. "C  [P^2]  slope 2.000000  residual 1e-16  PASS".
  std::string summary() const;
};

/// Computes the indicator on replicate_scale(base, lambda) for every lambda,
/// fits the log-log slope and passes iff |slope - declared exponent| <= tolerance.
/// A series that is zero at every scale passes as "exactly zero at all scales".
/// Fit failures are rethrown as DegenerateSeriesError naming the indicator.
ProbeResult verify_dimension(const IndicatorDescriptor& desc, const CitationVector& base,
                             std::span<const std::uint64_t> lambdas,
                             std::optional<double> tolerance = std::nullopt);

}  // namespace scindex
