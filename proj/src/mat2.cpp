#include "freegen/mat2.hpp"

#include "freegen/errors.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace freegen {

Mat2::Mat2(Rational a11, Rational a12, Rational a21, Rational a22)
    : e11(std::move(a11)), e12(std::move(a12)), e21(std::move(a21)), e22(std::move(a22)) {}

Rational Mat2::det() const { return e11 * e22 - e12 * e21; }

bool Mat2::is_nonnegative() const {
  const Rational zero;
  return e11 >= zero && e12 >= zero && e21 >= zero && e22 >= zero;
}

Mat2 Mat2::inverse() const {
  const Rational d = det();
  if (d.is_zero()) throw std::domain_error("matrix " + str() + " is singular");
  return {e22 / d, -(e12 / d), -(e21 / d), e11 / d};
}

Rational Mat2::apply(const Rational& t) const {
  const Rational denom = e21 * t + e22;
  if (denom.is_zero()) {
    throw std::domain_error("transformation of " + str() + " undefined at t = " + t.str());
  }
  return (e11 * t + e12) / denom;
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.e11 * n.e11 + m.e12 * n.e21, m.e11 * n.e12 + m.e12 * n.e22,
          m.e21 * n.e11 + m.e22 * n.e21, m.e21 * n.e12 + m.e22 * n.e22};
}

std::string Mat2::str() const {
  return "[[" + e11.str() + "," + e12.str() + "],[" + e21.str() + "," + e22.str() + "]]";
}

namespace {

// Tokens are brackets, commas and rational literals; whitespace between
// tokens is insignificant.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(next_token(), std::string("'") + c + "' in matrix text");
    }
    ++pos_;
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ == start) throw ParseError(next_token(), "a rational entry in matrix text");
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  void expect_end() {
    skip_ws();
    if (pos_ < text_.size()) throw ParseError(next_token(), "end of matrix text");
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string next_token() {
    skip_ws();
    if (pos_ >= text_.size()) return "end of input";
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
           end - pos_ < 16) {
      ++end;
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Mat2 Mat2::parse(std::string_view text) {
  Scanner scan(text);
  scan.expect('[');
  scan.expect('[');
  Rational a11 = scan.rational();
  scan.expect(',');
  Rational a12 = scan.rational();
  scan.expect(']');
  scan.expect(',');
  scan.expect('[');
  Rational a21 = scan.rational();
  scan.expect(',');
  Rational a22 = scan.rational();
  scan.expect(']');
  scan.expect(']');
  scan.expect_end();
  return {std::move(a11), std::move(a12), std::move(a21), std::move(a22)};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }

}  // namespace freegen

std::size_t std::hash<freegen::Mat2>::operator()(const freegen::Mat2& m) const {
  const std::hash<freegen::Rational> h;
  std::size_t seed = h(m.e11);
  seed = freegen::detail::hash_mix(seed, h(m.e12));
  seed = freegen::detail::hash_mix(seed, h(m.e21));
  seed = freegen::detail::hash_mix(seed, h(m.e22));
  return seed;
}
