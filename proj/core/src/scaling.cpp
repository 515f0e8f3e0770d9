#include "scindex/scaling.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "scindex/errors.hpp"

namespace scindex {

CitationVector replicate_scale(const CitationVector& v, std::uint64_t lambda) {
  if (v.empty()) throw EmptyPortfolioError{};
  if (lambda == 0) throw DomainError("replication factor must be >= 1");
  std::vector<std::uint64_t> out;
  out.reserve(v.size() * lambda);
  for (std::uint64_t c : v.counts()) {
    std::uint64_t scaled;
    if (__builtin_mul_overflow(c, lambda, &scaled)) throw DomainError("replicated count overflows");
    out.insert(out.end(), lambda, scaled);
  }
  return CitationVector{std::move(out)};
}

ExponentEstimate loglog_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DegenerateSeriesError("abscissa and ordinate lengths differ");
  if (x.size() < 3) {
    throw DegenerateSeriesError(fmt::format("need at least 3 points for a fit, got {}", x.size()));
  }
  std::vector<double> lx(x.size());
  std::vector<double> ly(y.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!(x[k] > 0.0) || !(y[k] > 0.0)) {
      throw DegenerateSeriesError(
          fmt::format("point {} ({}, {}) is not strictly positive", k, x[k], y[k]));
    }
    lx[k] = std::log(x[k]);
    ly[k] = std::log(y[k]);
  }
  const double n = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    mx += lx[k];
    my += ly[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxy += (lx[k] - mx) * (ly[k] - my);
  }
  if (sxx == 0.0) throw DegenerateSeriesError("all abscissae are equal");

  ExponentEstimate est;
  est.slope = sxy / sxx;
  est.intercept = my - est.slope * mx;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    est.max_residual =
        std::max(est.max_residual, std::abs(ly[k] - (est.intercept + est.slope * lx[k])));
  }
  return est;
}

ExponentEstimate loglog_fit(const ScaleSeries& series) {
  if (series.lambdas.size() != series.values.size()) {
    throw DegenerateSeriesError("lambda and value counts differ");
  }
  if (series.lambdas.size() < 3) {
    throw DegenerateSeriesError(
        fmt::format("need at least 3 points for a fit, got {}", series.lambdas.size()));
  }
  std::vector<double> x;
  x.reserve(series.lambdas.size());
  for (std::size_t k = 0; k < series.lambdas.size(); ++k) {
    if (series.lambdas[k] == 0 || (k > 0 && series.lambdas[k] <= series.lambdas[k - 1])) {
      throw DegenerateSeriesError("lambdas must be positive and strictly increasing");
    }
    x.push_back(static_cast<double>(series.lambdas[k]));
  }
  return loglog_fit(x, series.values);
}

double default_tolerance(std::string_view indicator) { return indicator == "g" ? 0.05 : 1e-6; }

std::string ProbeResult::summary() const {
  const char* verdict = pass ? "PASS" : "FAIL";
  if (exactly_zero) {
    return fmt::format("{:<4} {:<14} exactly zero at all scales: consistent  {}", name,
                       declared_dim.to_string(), verdict);
  }
  return fmt::format("{:<4} {:<14} expected {:<8.4f} slope {:.6f}  residual {:.2e}  {}", name,
                     declared_dim.to_string(), declared_dim.exponent().to_double(), fit->slope,
                     fit->max_residual, verdict);
}

ProbeResult verify_dimension(const IndicatorDescriptor& desc, const CitationVector& base,
                             std::span<const std::uint64_t> lambdas,
                             std::optional<double> tolerance) {
  if (base.empty()) throw EmptyPortfolioError{};
  ProbeResult result;
  result.name = std::string(desc.name);
  result.declared_dim = desc.declared_dim;
  result.tolerance = tolerance.value_or(default_tolerance(desc.name));
  result.series.lambdas.assign(lambdas.begin(), lambdas.end());
  for (std::uint64_t lambda : lambdas) {
    result.series.values.push_back(desc.compute(replicate_scale(base, lambda)).magnitude());
  }

  const auto& values = result.series.values;
  if (!values.empty() && std::all_of(values.begin(), values.end(), [](double x) { return x == 0.0; })) {
    result.exactly_zero = true;
    result.pass = true;
    return result;
  }
  try {
    result.fit = loglog_fit(result.series);
  } catch (const DegenerateSeriesError& e) {
    throw DegenerateSeriesError(fmt::format("indicator {}: {}", desc.name, e.what()));
  }
  const double expected = desc.declared_dim.exponent().to_double();
  result.pass = std::abs(result.fit->slope - expected) <= result.tolerance;
  return result;
}

}  // namespace scindex
