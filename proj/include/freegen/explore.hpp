#pragma once

#include "freegen/mat2.hpp"
#include "freegen/rational.hpp"
#include "freegen/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freegen {

/// One vertex of the Calkin-Wilf tree: its value together with the descent
/// word from the root, in application order (Letter::A = left step
/// t -> t/(t+1), Letter::B = right step t -> t+1).
struct CwNode {
  Rational value;
  Word path;

  friend bool operator==(const CwNode&, const CwNode&) = default;
};

/// (t/(t+1), t+1); throws std::domain_error unless t > 0.
std::pair<Rational, Rational> cw_children(const Rational& t);

/// Levels 0..depth of the tree rooted at 1; level d holds 2^d nodes in
/// left-to-right order.
std::vector<std::vector<CwNode>> cw_tree(std::size_t depth);

/// The unique descent word from 1 to q, recovered backward: a value above 1
/// came from a right step (predecessor q-1), a value below 1 from a left step
/// (predecessor q/(1-q)). Takes numerator+denominator steps at most. Throws
/// std::domain_error unless q > 0.
///
/// The word lists steps root-to-leaf. Viewing each step as a generator
/// matrix, q = (X_k ... X_2 X_1)(1): evaluating the descent as one product
/// takes the letters in reverse.
Word cw_path(const Rational& q);

struct Collision {
  Word word1;  // shortlex-smaller word
  Word word2;  // the later word; the report is minimal in this component
  Mat2 product;

  friend bool operator==(const Collision&, const Collision&) = default;
};

struct CollisionReport {
  Mat2 a;
  Mat2 b;
  std::size_t max_len = 0;
  std::uint64_t words_enumerated = 0;  // always 2^(max_len+1) - 2: the search is exhaustive
  std::optional<Collision> collision;

  /// Key-value text in the same style as certificate serialization.
  std::string to_text() const;
};

/// Multiplies out every nonempty word over {a, b} of length <= max_len and
/// looks for two distinct words with equal products. When collisions exist,
/// the reported pair is the one whose later word is shortlex-minimal; the
/// earlier word is the shortlex-least word producing that matrix. Output is
/// identical for any worker count. max_len is capped at 24 to bound the
/// product table; the report re-encodes both words before returning.
CollisionReport collision_search(const Mat2& a, const Mat2& b, std::size_t max_len,
                                 unsigned jobs = 1);

}  // namespace freegen
