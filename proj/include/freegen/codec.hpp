#pragma once

#include "freegen/certify.hpp"
#include "freegen/mat2.hpp"
#include "freegen/word.hpp"

#include <cstddef>
#include <iosfwd>
#include <variant>

namespace freegen {

enum class NotMemberReason {
  NegativeInputEntry,       // members are products of nonnegative matrices
  ZeroDeterminant,          // members have det(A)^i * det(B)^j != 0
  FixesOneButNotIdentity,   // every nonempty member moves 1 off itself
  NegativeEntryAfterStrip,  // the forced leading factor admits no continuation
};

const char* to_string(NotMemberReason reason);

struct Member {
  Word word;
  friend bool operator==(const Member&, const Member&) = default;
};

struct NotMember {
  NotMemberReason reason;
  friend bool operator==(const NotMember&, const NotMember&) = default;
};

struct FuelExhausted {
  std::size_t steps = 0;
  Word partial;
  friend bool operator==(const FuelExhausted&, const FuelExhausted&) = default;
};

/// Member and NotMember are definitive; FuelExhausted is an honest "don't
/// know" after the step budget ran out.
using DecodeOutcome = std::variant<Member, NotMember, FuelExhausted>;

std::ostream& operator<<(std::ostream& os, const DecodeOutcome& outcome);

/// Left-to-right product of the certified generators named by the word
/// (Letter::A -> role-A matrix); the empty word yields the identity. Throws
/// std::invalid_argument on a NotCovered certificate.
Mat2 encode(const Word& w, const FreenessCertificate& cert);

/// inverse(leading) * m: one undo step of encode. Throws std::domain_error on
/// a singular leading matrix.
Mat2 strip_leading(const Mat2& m, const Mat2& leading);

/// Greedy factorization over a certified pair.
///
/// A nonempty product of the certified generators maps 1 strictly below 1
/// exactly when its leading factor is role A, and strictly above 1 exactly
/// when it is role B, so the leading letter of any member is forced by where
/// the matrix sends 1. The loop strips that factor, at most `fuel` times, and
/// accepts on reaching the identity. Every matrix that is a product of at
/// most `fuel` generators decodes to Member with its unique word; rejections
/// name the membership-necessary condition the input violated and are always
/// sound. Anything still unsettled when the budget runs out comes back
/// FuelExhausted.
///
/// Throws std::invalid_argument on a NotCovered certificate or fuel == 0.
DecodeOutcome decode(const Mat2& m, const FreenessCertificate& cert, std::size_t fuel);

}  // namespace freegen
