#include "freegen/certify.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

using freegen::check_free_pair;
using freegen::FreenessCertificate;
using freegen::Mat2;
using freegen::named_pair;
using freegen::ping_pong_witness;
using freegen::Rational;
using freegen::RoleOrder;
using freegen::Verdict;

namespace {
const Mat2 kL1{1, 0, 1, 1};
const Mat2 kR1{1, 1, 0, 1};
const Mat2 kL2{1, 0, 2, 1};
const Mat2 kR2{1, 2, 0, 1};
}  // namespace

TEST_CASE("the Calkin-Wilf pair certifies with ties allowed") {
  const FreenessCertificate cert = check_free_pair(kL1, kR1);
  REQUIRE(cert.certified());
  CHECK(cert.roles == RoleOrder::FirstIsA);
  CHECK(cert.role_a() == kL1);
  CHECK(cert.role_b() == kR1);
  CHECK(cert.checks.size() == 14);
  for (const auto& check : cert.checks) CHECK(check.holds);
}

TEST_CASE("role assignment follows the matrices, not the argument order") {
  const FreenessCertificate cert = check_free_pair(kR1, kL1);
  REQUIRE(cert.certified());
  CHECK(cert.roles == RoleOrder::SecondIsA);
  CHECK(cert.role_a() == kL1);
  CHECK(cert.role_b() == kR1);
}

TEST_CASE("the Sanov pair certifies") {
  CHECK(check_free_pair(kL2, kR2).certified());
}

TEST_CASE("a doubled lower-triangular partner is not covered") {
  const Mat2 doubled{2, 0, 2, 2};
  const FreenessCertificate cert = check_free_pair(kL1, doubled);
  REQUIRE_FALSE(cert.certified());
  CHECK_FALSE(cert.roles.has_value());
  CHECK_THROWS_AS(cert.role_a(), std::logic_error);

  // both assignments fail on the same dominance inequality, with the values recorded
  REQUIRE(cert.checks.size() == 2);
  CHECK(cert.checks[0].name == "(A=first,B=second) B[1,2] >= B[2,2]");
  CHECK(cert.checks[0].left == Rational(0));
  CHECK(cert.checks[0].right == Rational(2));
  CHECK_FALSE(cert.checks[0].holds);
  CHECK(cert.checks[1].name == "(A=second,B=first) B[1,2] >= B[2,2]");
  CHECK(cert.checks[1].left == Rational(0));
  CHECK(cert.checks[1].right == Rational(1));
}

TEST_CASE("the identity paired with an expanding generator is not covered") {
  const FreenessCertificate cert = check_free_pair(Mat2{}, kR1);
  REQUIRE_FALSE(cert.certified());
  bool identity_fails_dominance = false;
  for (const auto& check : cert.checks) {
    if (check.name == "(A=first,B=second) A[1,1] <= A[2,1]") {
      identity_fails_dominance = true;
      CHECK(check.left == Rational(1));
      CHECK(check.right == Rational(0));
    }
  }
  CHECK(identity_fails_dominance);
}

TEST_CASE("singular matrices are rejected by the determinant check") {
  const FreenessCertificate cert = check_free_pair(Mat2{1, 1, 1, 1}, kR1);
  CHECK_FALSE(cert.certified());
  bool det_failure = false;
  for (const auto& check : cert.checks) {
    if (check.name.find("det(") != std::string::npos) det_failure = true;
  }
  CHECK(det_failure);
}

TEST_CASE("named pairs") {
  const auto cw = named_pair("calkin-wilf");
  CHECK(cw.first == kL1);
  CHECK(cw.second == kR1);

  const auto sanov = named_pair("sanov");
  CHECK(sanov.first == kL2);
  CHECK(sanov.second == kR2);

  const auto parametric = named_pair("lu-rv:3:5");
  CHECK(parametric.first == Mat2{1, 0, 3, 1});
  CHECK(parametric.second == Mat2{1, 5, 0, 1});

  CHECK_THROWS_AS(named_pair("stern-brocot"), std::invalid_argument);
  CHECK_THROWS_AS(named_pair("lu-rv:0:2"), std::invalid_argument);
  CHECK_THROWS_AS(named_pair("lu-rv:3"), std::invalid_argument);
  CHECK_THROWS_AS(named_pair("lu-rv:x:2"), std::invalid_argument);
  CHECK_THROWS_AS(named_pair("lu-rv:-1:2"), std::invalid_argument);
}

TEST_CASE("ping-pong witness values") {
  const FreenessCertificate cw = check_free_pair(kL1, kR1);
  const std::array<Rational, 1> one{Rational(1)};
  const auto cw_samples = ping_pong_witness(cw, one);
  REQUIRE(cw_samples.size() == 1);
  CHECK(cw_samples[0].a_of_t == Rational(1, 2));
  CHECK(cw_samples[0].b_of_t == Rational(2));

  const FreenessCertificate sanov = check_free_pair(kL2, kR2);
  const auto sanov_samples = ping_pong_witness(sanov, one);
  CHECK(sanov_samples[0].a_of_t == Rational(1, 3));
  CHECK(sanov_samples[0].b_of_t == Rational(3));

  const Mat2 frac_a{Rational(1, 2), Rational(1, 3), 1, 1};
  const Mat2 frac_b{1, 1, Rational(1, 2), Rational(1, 3)};
  CHECK(frac_a.det() == Rational(1, 6));
  CHECK(frac_b.det() == Rational(-1, 6));
  const FreenessCertificate frac = check_free_pair(frac_a, frac_b);
  REQUIRE(frac.certified());
  const std::array<Rational, 1> two{Rational(2)};
  const auto frac_samples = ping_pong_witness(frac, two);
  CHECK(frac_samples[0].a_of_t == Rational(4, 9));
  CHECK(frac_samples[0].b_of_t == Rational(9, 4));
}

TEST_CASE("ping-pong witness input validation") {
  const FreenessCertificate not_covered = check_free_pair(Mat2{}, kR1);
  const std::array<Rational, 1> one{Rational(1)};
  CHECK_THROWS_AS(ping_pong_witness(not_covered, one), std::invalid_argument);

  const FreenessCertificate cw = check_free_pair(kL1, kR1);
  const std::array<Rational, 1> zero{Rational(0)};
  CHECK_THROWS_AS(ping_pong_witness(cw, zero), std::invalid_argument);
  const std::array<Rational, 1> negative{Rational(-1, 2)};
  CHECK_THROWS_AS(ping_pong_witness(cw, negative), std::invalid_argument);
}

TEST_CASE("certified pairs separate around 1 on random samples") {
  auto rng = freegen::testsupport::make_rng(29);
  std::vector<FreenessCertificate> certs{check_free_pair(kL1, kR1), check_free_pair(kL2, kR2)};
  for (int i = 0; i < 3; ++i) {
    const auto [a, b] = freegen::testsupport::random_certified_pair(rng);
    certs.push_back(check_free_pair(a, b));
  }
  for (const auto& cert : certs) {
    std::vector<Rational> samples;
    samples.reserve(500);
    for (int i = 0; i < 500; ++i) {
      samples.push_back(freegen::testsupport::random_positive_rational(rng));
    }
    const auto witnessed = ping_pong_witness(cert, samples);  // throws on any violation
    CHECK(witnessed.size() == samples.size());
  }
}

TEST_CASE("certified role-A matrices never have two equal rows") {
  auto rng = freegen::testsupport::make_rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto [a, b] = freegen::testsupport::random_certified_pair(rng);
    const FreenessCertificate cert = check_free_pair(a, b);
    REQUIRE(cert.certified());
    const Mat2& role_a = cert.role_a();
    CHECK_FALSE((role_a.e11 == role_a.e21 && role_a.e12 == role_a.e22));
    const Mat2& role_b = cert.role_b();
    CHECK_FALSE((role_b.e11 == role_b.e21 && role_b.e12 == role_b.e22));
  }
}

TEST_CASE("the verdict is symmetric in the arguments") {
  auto rng = freegen::testsupport::make_rng(37);
  for (int i = 0; i < 300; ++i) {
    const Mat2 p = freegen::testsupport::random_signed_mat(rng, 4);
    const Mat2 q = freegen::testsupport::random_signed_mat(rng, 4);
    CHECK(check_free_pair(p, q).verdict == check_free_pair(q, p).verdict);
  }
}

TEST_CASE("the verdict is Certified exactly when all recorded checks hold") {
  auto rng = freegen::testsupport::make_rng(43);
  for (int i = 0; i < 300; ++i) {
    const Mat2 p = freegen::testsupport::random_signed_mat(rng, 4);
    const Mat2 q = freegen::testsupport::random_signed_mat(rng, 4);
    const FreenessCertificate cert = check_free_pair(p, q);
    bool all_hold = true;
    for (const auto& check : cert.checks) all_hold = all_hold && check.holds;
    CHECK(cert.certified() == all_hold);
    if (!cert.certified()) CHECK_FALSE(cert.checks.empty());
  }
}

TEST_CASE("certificate serialization lists every check with its values") {
  const std::string text = check_free_pair(kL1, kR1).to_text();
  CHECK(text.find("verdict: Certified") != std::string::npos);
  CHECK(text.find("role_a: first") != std::string::npos);
  CHECK(text.find("role_b: second") != std::string::npos);
  CHECK(text.find("[1 <= 1]") != std::string::npos);
  CHECK(text.find("[0 <= 1]") != std::string::npos);
  CHECK(text.find("[1 >= 0]") != std::string::npos);
  CHECK(text.find("[1 >= 1]") != std::string::npos);

  const std::string refused = check_free_pair(kL1, Mat2{2, 0, 2, 2}).to_text();
  CHECK(refused.find("verdict: NotCovered") != std::string::npos);
  CHECK(refused.find("FAILED") != std::string::npos);
  CHECK(refused.find("(A=first,B=second)") != std::string::npos);
  CHECK(refused.find("(A=second,B=first)") != std::string::npos);
  CHECK(refused.find("role_a") == std::string::npos);
}
