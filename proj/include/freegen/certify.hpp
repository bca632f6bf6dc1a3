#pragma once

#include "freegen/mat2.hpp"
#include "freegen/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace freegen {

enum class Verdict { Certified, NotCovered };

/// Which of the two inputs was assigned the contracting role A.
enum class RoleOrder { FirstIsA, SecondIsA };

/// One evaluated inequality, kept with the exact values compared so a log
/// shows precisely what held or failed.
struct InequalityCheck {
  std::string name;      // e.g. "A[1,1] <= A[2,1]", prefixed with the attempt when NotCovered
  std::string relation;  // "<=", ">=" or "!="
  Rational left;
  Rational right;
  bool holds = false;

  friend bool operator==(const InequalityCheck&, const InequalityCheck&) = default;
};

/// Outcome of the sufficient freeness test for an unordered pair of matrices.
///
/// Certified means: both matrices are nonnegative with nonzero determinant,
/// the role-A matrix has its top row entrywise <= its bottom row, and the
/// role-B matrix has its top row entrywise >= its bottom row. Any such pair
/// generates a free monoid: role A sends every positive input into (0,1),
/// role B into (1,inf), so products can never agree letter by letter without
/// being the same word.
///
/// NotCovered records which inequalities failed under both role assignments.
/// It is NOT a claim of non-freeness; the test is sufficient only.
struct FreenessCertificate {
  Mat2 first;   // the pair exactly as given
  Mat2 second;
  Verdict verdict = Verdict::NotCovered;
  std::optional<RoleOrder> roles;  // engaged iff verdict == Certified

  /// Certified: every check of the accepted assignment (all holding).
  /// NotCovered: the failed checks of both assignments.
  std::vector<InequalityCheck> checks;

  bool certified() const { return verdict == Verdict::Certified; }

  /// The certified role matrices; throw std::logic_error unless certified.
  const Mat2& role_a() const;
  const Mat2& role_b() const;

  /// Key-value text document, one check per line.
  std::string to_text() const;
};

/// Tries (A=first, B=second), then the swap; the first assignment whose
/// determinant, nonnegativity and row-dominance checks all hold wins. The
/// comparisons are non-strict: ties such as a11 == a21 are fine, only the
/// degenerate "both rows equal" case is excluded, and that via the
/// determinant.
FreenessCertificate check_free_pair(const Mat2& first, const Mat2& second);

struct PingPongSample {
  Rational t;
  Rational a_of_t;
  Rational b_of_t;

  friend bool operator==(const PingPongSample&, const PingPongSample&) = default;
};

/// Evaluates both certified generators at every sample and checks the
/// separation 0 < A(t) < 1 < B(t). A violation would mean the certificate is
/// unsound, so it raises std::logic_error instead of returning. Throws
/// std::invalid_argument on a NotCovered certificate or a sample <= 0.
std::vector<PingPongSample> ping_pong_witness(const FreenessCertificate& cert,
                                              std::span<const Rational> samples);

/// Built-in pairs: "calkin-wilf" ([[1,0],[1,1]] and [[1,1],[0,1]]), "sanov"
/// ([[1,0],[2,1]] and [[1,2],[0,1]]), and "lu-rv:<u>:<v>" for positive
/// integers u, v ([[1,0],[u,1]] and [[1,v],[0,1]]). Throws
/// std::invalid_argument for anything else.
std::pair<Mat2, Mat2> named_pair(std::string_view name);

}  // namespace freegen
