#include "freegen/codec.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace freegen {

const char* to_string(NotMemberReason reason) {
  switch (reason) {
    case NotMemberReason::NegativeInputEntry:
      return "NegativeInputEntry";
    case NotMemberReason::ZeroDeterminant:
      return "ZeroDeterminant";
    case NotMemberReason::FixesOneButNotIdentity:
      return "FixesOneButNotIdentity";
    case NotMemberReason::NegativeEntryAfterStrip:
      return "NegativeEntryAfterStrip";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const DecodeOutcome& outcome) {
  if (const auto* member = std::get_if<Member>(&outcome)) {
    return os << "Member(" << member->word << ")";
  }
  if (const auto* reject = std::get_if<NotMember>(&outcome)) {
    return os << "NotMember(" << to_string(reject->reason) << ")";
  }
  const auto& exhausted = std::get<FuelExhausted>(outcome);
  return os << "FuelExhausted(steps=" << exhausted.steps << ", partial=" << exhausted.partial
            << ")";
}

Mat2 encode(const Word& w, const FreenessCertificate& cert) {
  if (!cert.certified()) throw std::invalid_argument("encode requires a Certified pair");
  Mat2 product;
  for (Letter l : w) product = product * (l == Letter::A ? cert.role_a() : cert.role_b());
  return product;
}

Mat2 strip_leading(const Mat2& m, const Mat2& leading) { return leading.inverse() * m; }

DecodeOutcome decode(const Mat2& m, const FreenessCertificate& cert, std::size_t fuel) {
  if (!cert.certified()) throw std::invalid_argument("decode requires a Certified pair");
  if (fuel == 0) throw std::invalid_argument("decode fuel must be at least 1");

  if (!m.is_nonnegative()) return NotMember{NotMemberReason::NegativeInputEntry};
  if (m.det().is_zero()) return NotMember{NotMemberReason::ZeroDeterminant};

  const Mat2 identity;
  const Rational one = 1;
  const Mat2 a_inverse = cert.role_a().inverse();
  const Mat2 b_inverse = cert.role_b().inverse();

  Mat2 rest = m;
  Word word;
  for (std::size_t steps = 0;; ++steps) {
    if (rest == identity) return Member{std::move(word)};
    if (steps == fuel) return FuelExhausted{steps, std::move(word)};

    // rest stays nonnegative with nonzero determinant here, so the
    // transformation is defined at 1 and positive.
    const Rational image = rest.apply(one);
    if (image == one) return NotMember{NotMemberReason::FixesOneButNotIdentity};

    const bool leading_a = image < one;
    rest = (leading_a ? a_inverse : b_inverse) * rest;
    if (!rest.is_nonnegative()) return NotMember{NotMemberReason::NegativeEntryAfterStrip};
    word.push_back(leading_a ? Letter::A : Letter::B);
  }
}

}  // namespace freegen
