#include "freegen/mat2.hpp"

#include "freegen/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>

using freegen::Mat2;
using freegen::ParseError;
using freegen::Rational;

namespace {
const Mat2 kLower{1, 0, 1, 1};  // [[1,0],[1,1]]
const Mat2 kUpper{1, 1, 0, 1};  // [[1,1],[0,1]]
}  // namespace

TEST_CASE("multiplication basics") {
  const Mat2 identity;
  CHECK(identity * kLower == kLower);
  CHECK(kLower * identity == kLower);
  CHECK(kLower * kUpper == Mat2{1, 1, 1, 2});
  CHECK(kUpper * kLower == Mat2{2, 1, 1, 1});
  CHECK(kLower * kUpper != kUpper * kLower);
}

TEST_CASE("determinant") {
  CHECK(Mat2{}.det() == Rational(1));
  CHECK(kLower.det() == Rational(1));
  CHECK(Mat2{Rational(1, 2), Rational(1, 3), 1, 1}.det() == Rational(1, 6));
  CHECK(Mat2{1, 1, 1, 1}.det() == Rational(0));
  CHECK_FALSE(Mat2{1, 1, 1, 1}.is_invertible());
}

TEST_CASE("inverse") {
  CHECK(Mat2{}.inverse() == Mat2{});
  CHECK(kLower.inverse() == Mat2{1, 0, -1, 1});
  CHECK(kLower * kLower.inverse() == Mat2{});
  CHECK_THROWS_AS(Mat2(1, 1, 1, 1).inverse(), std::domain_error);
}

TEST_CASE("transformation application") {
  const Rational t{7, 3};
  CHECK(Mat2{}.apply(t) == t);
  CHECK(kLower.apply(Rational(1)) == Rational(1, 2));  // t/(t+1)
  CHECK(kUpper.apply(Rational(1)) == Rational(2));     // t+1
  // guard: vanishing denominator is only reachable with a negative entry
  CHECK_THROWS_AS(Mat2(1, 0, 1, -1).apply(Rational(1)), std::domain_error);
}

TEST_CASE("nonnegativity predicate") {
  CHECK(kLower.is_nonnegative());
  CHECK(Mat2{0, 0, 0, 0}.is_nonnegative());
  CHECK_FALSE(Mat2{1, 0, -1, 1}.is_nonnegative());
}

TEST_CASE("text form round-trips and is whitespace-insensitive on parse") {
  CHECK(kLower.str() == "[[1,0],[1,1]]");
  CHECK(Mat2{Rational(1, 2), Rational(-1, 3), 0, 1}.str() == "[[1/2,-1/3],[0,1]]");
  CHECK(Mat2::parse("[[1,0],[1,1]]") == kLower);
  CHECK(Mat2::parse(" [ [ 1 , 0 ] , [ 1 , 1 ] ] ") == kLower);
  CHECK(Mat2::parse("[[1/2,-1/3],[0,1]]") == Mat2{Rational(1, 2), Rational(-1, 3), 0, 1});

  auto rng = freegen::testsupport::make_rng(5);
  for (int i = 0; i < 200; ++i) {
    const Mat2 m = freegen::testsupport::random_signed_mat(rng);
    CHECK(Mat2::parse(m.str()) == m);
  }
}

TEST_CASE("parse failures name the offending token") {
  CHECK_THROWS_AS(Mat2::parse("[[1,0],[1]]"), ParseError);
  CHECK_THROWS_AS(Mat2::parse("[[1,0],[1,1]"), ParseError);
  CHECK_THROWS_AS(Mat2::parse("[[1,0],[1,1]]x"), ParseError);
  CHECK_THROWS_AS(Mat2::parse(""), ParseError);
  CHECK_THROWS_WITH_AS(Mat2::parse("[[1,zz],[1,1]]"), doctest::Contains("zz"), ParseError);
  CHECK_THROWS_WITH_AS(Mat2::parse("[[1 0],[1,1]]"), doctest::Contains("0]"), ParseError);
}

TEST_CASE("determinant is multiplicative") {
  auto rng = freegen::testsupport::make_rng(7);
  for (int i = 0; i < 500; ++i) {
    const Mat2 m = freegen::testsupport::random_signed_mat(rng);
    const Mat2 n = freegen::testsupport::random_signed_mat(rng);
    CHECK((m * n).det() == m.det() * n.det());
  }
}

TEST_CASE("inverse works on both sides") {
  auto rng = freegen::testsupport::make_rng(11);
  for (int i = 0; i < 500; ++i) {
    const Mat2 m = freegen::testsupport::random_invertible_mat(rng);
    CHECK(m * m.inverse() == Mat2{});
    CHECK(m.inverse() * m == Mat2{});
  }
}

TEST_CASE("applying a product composes the transformations") {
  auto rng = freegen::testsupport::make_rng(13);
  for (int i = 0; i < 500; ++i) {
    const Mat2 m = freegen::testsupport::random_nonneg_invertible_mat(rng);
    const Mat2 n = freegen::testsupport::random_nonneg_invertible_mat(rng);
    const Rational t = freegen::testsupport::random_positive_rational(rng);
    CHECK((m * n).apply(t) == m.apply(n.apply(t)));
  }
}

TEST_CASE("nonnegative invertible matrices map positives to positives") {
  auto rng = freegen::testsupport::make_rng(19);
  for (int i = 0; i < 500; ++i) {
    const Mat2 m = freegen::testsupport::random_nonneg_invertible_mat(rng);
    const Rational t = freegen::testsupport::random_positive_rational(rng);
    CHECK(m.apply(t) > Rational(0));
  }
}
