#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace freegen {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
inline std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace detail

/// Arbitrary-precision rational kept in canonical form: lowest terms with a
/// positive denominator. Canonical form makes equality componentwise (and
/// identical to cross-multiplication equality) and hashing stable.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : num_(value) {}          // intentionally implicit
  Rational(BigInt value) : num_(std::move(value)) {}  // intentionally implicit

  /// Throws std::domain_error when den == 0; any other input normalizes.
  Rational(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  /// Throws std::domain_error when y == 0.
  friend Rational operator/(const Rational& x, const Rational& y);

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  /// Inverse of str(): accepts "p" and "p/q" with an optional leading minus,
  /// surrounding whitespace ignored. Throws ParseError naming the bad token.
  static Rational parse(std::string_view text);

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;

  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace freegen

template <>
struct std::hash<freegen::Rational> {
  std::size_t operator()(const freegen::Rational& r) const;
};
