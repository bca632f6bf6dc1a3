#include "freegen/rational.hpp"

#include "freegen/errors.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace freegen {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Rational::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = gcd(abs(num_), den_);  // gcd(0, d) == d, so 0/d lands on 0/1
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& x, const Rational& y) {
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator-(const Rational& x, const Rational& y) {
  return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
}

Rational operator*(const Rational& x, const Rational& y) {
  return {x.num_ * y.num_, x.den_ * y.den_};
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_.is_zero()) throw std::domain_error("division by zero rational");
  return {x.num_ * y.den_, x.den_ * y.num_};
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const BigInt lhs = x.num_ * y.den_;
  const BigInt rhs = y.num_ * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view body = trim(text);
  const auto fail = [&](const char* expected) -> Rational {
    const std::string token = body.empty() ? "end of input" : std::string(body);
    throw ParseError(token, expected);
  };

  std::string_view rest = body;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }

  const std::size_t slash = rest.find('/');
  const std::string_view num_digits = rest.substr(0, slash);
  if (!all_digits(num_digits)) return fail("a rational like \"p/q\" or \"p\"");

  BigInt num{std::string(num_digits)};
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_digits = rest.substr(slash + 1);
    if (!all_digits(den_digits)) return fail("a rational like \"p/q\" or \"p\"");
    den = BigInt{std::string(den_digits)};
    if (den.is_zero()) return fail("a nonzero denominator");
  }
  if (negative) num = -num;
  return {std::move(num), std::move(den)};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace freegen

std::size_t std::hash<freegen::Rational>::operator()(const freegen::Rational& r) const {
  const std::hash<freegen::BigInt> h;
  return freegen::detail::hash_mix(h(r.num()), h(r.den()));
}
