#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace scindex {

/// Exact rational number kept in lowest terms with a positive denominator.
/// Arithmetic that would overflow 64 bits throws DomainError.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "3", "-1", "3/2".
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A power of the base unit [P]: the dimension [P^exponent].
class Dimension {
 public:
  constexpr Dimension() = default;
  explicit Dimension(Rational exponent) : exponent_(exponent) {}

  static Dimension dimensionless() { return Dimension{}; }
  static Dimension papers(std::int64_t num = 1, std::int64_t den = 1) {
    return Dimension{Rational{num, den}};
  }

  const Rational& exponent() const noexcept { return exponent_; }
  bool is_dimensionless() const noexcept { return exponent_.is_zero(); }

  friend bool operator==(const Dimension&, const Dimension&) = default;

  /// `[P]`, `[P^2]`, `[P^3/2]`, `[P^-1]`, or `dimensionless`.
  std::string to_string() const;

 private:
  Rational exponent_{};
};

Dimension dim_mul(const Dimension& a, const Dimension& b);
Dimension dim_div(const Dimension& a, const Dimension& b);
Dimension dim_pow(const Dimension& a, const Rational& r);

/// Inverse of Dimension::to_string. Throws DomainError on anything else.
Dimension parse_dimension(const std::string& text);

}  // namespace scindex
