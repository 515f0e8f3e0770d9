#include "scindex/dimension.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "scindex/errors.hpp"

namespace scindex {
namespace {

using Wide = __int128;

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces num/den computed in 128 bits back into a 64-bit Rational.
Rational narrow(Wide num, Wide den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) throw DomainError("rational exponent overflow");
  return Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  if (numerator == std::numeric_limits<std::int64_t>::min() ||
      denominator == std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("rational exponent overflow");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  return narrow(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return narrow(Wide{a.num_} * b.num_, Wide{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero exponent");
  return narrow(Wide{a.num_} * b.den_, Wide{a.den_} * b.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Dimension::to_string() const {
  if (exponent_.is_zero()) return "dimensionless";
  if (exponent_ == Rational{1}) return "[P]";
  return "[P^" + exponent_.to_string() + "]";
}

Dimension dim_mul(const Dimension& a, const Dimension& b) {
  return Dimension{a.exponent() + b.exponent()};
}

Dimension dim_div(const Dimension& a, const Dimension& b) {
  return Dimension{a.exponent() - b.exponent()};
}

Dimension dim_pow(const Dimension& a, const Rational& r) { return Dimension{a.exponent() * r}; }

Dimension parse_dimension(const std::string& text) {
  if (text == "dimensionless") return Dimension::dimensionless();
  if (text == "[P]") return Dimension::papers();
  const auto bad = [&] { return DomainError("not a dimension: '" + text + "'"); };
  if (text.size() < 5 || text.rfind("[P^", 0) != 0 || text.back() != ']') throw bad();

  const char* first = text.data() + 3;
  const char* last = text.data() + text.size() - 1;
  std::int64_t num = 0;
  std::int64_t den = 1;
  auto [p, ec] = std::from_chars(first, last, num);
  if (ec != std::errc{} || p == first) throw bad();
  if (p != last) {
    if (*p != '/') throw bad();
    auto [q, ec2] = std::from_chars(p + 1, last, den);
    if (ec2 != std::errc{} || q != last || den <= 0) throw bad();
  }
  Dimension d{Rational{num, den}};
  // Only the canonical rendering is accepted.
  if (d.to_string() != text) throw bad();
  return d;
}

}  // namespace scindex
