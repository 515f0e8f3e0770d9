#include "scindex/quantity.hpp"

#include <cmath>

#include <fmt/format.h>

#include "scindex/errors.hpp"

namespace scindex {
namespace {

void require_homogeneous(const Quantity& a, const Quantity& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw HeterogeneityError(fmt::format("cannot {} {} and {}: dimensions are not homogeneous", op,
                                         a.dim().to_string(), b.dim().to_string()));
  }
}

}  // namespace

Quantity::Quantity(double magnitude, Dimension dim) : magnitude_(magnitude), dim_(dim) {
  if (!std::isfinite(magnitude)) throw DomainError("non-finite magnitude");
}

std::string Quantity::to_string() const {
  return fmt::format("{} {}", magnitude_, dim_.to_string());
}

Quantity qty_add(const Quantity& a, const Quantity& b) {
  require_homogeneous(a, b, "add");
  return Quantity{a.magnitude() + b.magnitude(), a.dim()};
}

Quantity qty_sub(const Quantity& a, const Quantity& b) {
  require_homogeneous(a, b, "subtract");
  return Quantity{a.magnitude() - b.magnitude(), a.dim()};
}

Quantity qty_mul(const Quantity& a, const Quantity& b) {
  return Quantity{a.magnitude() * b.magnitude(), dim_mul(a.dim(), b.dim())};
}

Quantity qty_div(const Quantity& a, const Quantity& b) {
  if (b.magnitude() == 0.0) throw DomainError("division by a zero-magnitude quantity");
  return Quantity{a.magnitude() / b.magnitude(), dim_div(a.dim(), b.dim())};
}

Quantity qty_pow(const Quantity& a, const Rational& r) {
  double m;
  if (r == Rational{1, 2}) {
    m = std::sqrt(a.magnitude());
  } else if (r == Rational{1, 3}) {
    m = std::cbrt(a.magnitude());
  } else {
    m = std::pow(a.magnitude(), r.to_double());
  }
  if (!std::isfinite(m)) {
    throw DomainError(fmt::format("{} raised to {} is not a finite real", a.magnitude(),
                                  r.to_string()));
  }
  return Quantity{m, dim_pow(a.dim(), r)};
}

std::weak_ordering qty_compare(const Quantity& a, const Quantity& b) {
  require_homogeneous(a, b, "compare");
  if (a.magnitude() < b.magnitude()) return std::weak_ordering::less;
  if (a.magnitude() > b.magnitude()) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace scindex
