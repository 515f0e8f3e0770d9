#pragma once

#include <compare>
#include <string>

#include "scindex/dimension.hpp"

namespace scindex {

/// A finite real magnitude carrying a dimension over [P].
///
/// Construction and every operation reject non-finite results with
/// DomainError. Sums, differences and comparisons require equal dimensions
/// and throw HeterogeneityError otherwise; products, quotients and powers
/// combine dimensions through dim_mul / dim_div / dim_pow.
class Quantity {
 public:
  Quantity(double magnitude, Dimension dim);

  double magnitude() const noexcept { return magnitude_; }
  const Dimension& dim() const noexcept { return dim_; }

  std::string to_string() const;

 private:
  double magnitude_;
  Dimension dim_;
};

Quantity qty_add(const Quantity& a, const Quantity& b);
Quantity qty_sub(const Quantity& a, const Quantity& b);
Quantity qty_mul(const Quantity& a, const Quantity& b);
/// DomainError when b has zero magnitude.
Quantity qty_div(const Quantity& a, const Quantity& b);
Quantity qty_pow(const Quantity& a, const Rational& r);
std::weak_ordering qty_compare(const Quantity& a, const Quantity& b);

inline Quantity operator+(const Quantity& a, const Quantity& b) { return qty_add(a, b); }
inline Quantity operator-(const Quantity& a, const Quantity& b) { return qty_sub(a, b); }
inline Quantity operator*(const Quantity& a, const Quantity& b) { return qty_mul(a, b); }
inline Quantity operator/(const Quantity& a, const Quantity& b) { return qty_div(a, b); }
inline std::weak_ordering operator<=>(const Quantity& a, const Quantity& b) {
  return qty_compare(a, b);
}
/// Homogeneous equality of magnitudes; throws on mixed dimensions like <=>.
inline bool operator==(const Quantity& a, const Quantity& b) {
  return qty_compare(a, b) == std::weak_ordering::equivalent;
}

}  // namespace scindex
