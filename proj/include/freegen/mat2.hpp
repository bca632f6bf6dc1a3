#pragma once

#include "freegen/rational.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace freegen {

/// Row-major 2x2 rational matrix. Construction imposes no sign or determinant
/// constraint: intermediates such as generator inverses legitimately carry
/// negative entries, so nonnegativity and invertibility are checked by the
/// operations that need them.
struct Mat2 {
  Rational e11 = 1, e12 = 0, e21 = 0, e22 = 1;

  Mat2() = default;  // identity
  Mat2(Rational a11, Rational a12, Rational a21, Rational a22);

  static Mat2 identity() { return {}; }

  Rational det() const;
  bool is_nonnegative() const;
  bool is_invertible() const { return !det().is_zero(); }

  /// Exact inverse; mat * mat.inverse() == identity. Throws std::domain_error
  /// on a singular matrix.
  Mat2 inverse() const;

  /// The linear fractional transformation t -> (e11*t + e12) / (e21*t + e22).
  /// A nonnegative invertible matrix maps every t > 0 to a positive value.
  /// Throws std::domain_error when the denominator vanishes, which can only
  /// happen if those preconditions are violated; callers probing arbitrary
  /// matrices rely on the guard.
  Rational apply(const Rational& t) const;

  friend Mat2 operator*(const Mat2& m, const Mat2& n);
  friend bool operator==(const Mat2&, const Mat2&) = default;

  /// Canonical text form "[[e11,e12],[e21,e22]]", no spaces.
  std::string str() const;

  /// Whitespace-insensitive inverse of str(). Throws ParseError naming the
  /// offending token.
  static Mat2 parse(std::string_view text);
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace freegen

template <>
struct std::hash<freegen::Mat2> {
  std::size_t operator()(const freegen::Mat2& m) const;
};
