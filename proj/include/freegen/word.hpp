#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace freegen {

/// Generator alphabet. Letter::A names the role-A (contracting) generator of a
/// certified pair, Letter::B the role-B (expanding) one.
enum class Letter : std::uint8_t { A = 0, B = 1 };

/// A word over {A, B}; the empty word stands for the identity product.
using Word = std::vector<Letter>;

/// Rendering alphabets: plain A/B, or the traditional L/R names of the
/// Calkin-Wilf generators.
enum class Alphabet { AB, LR };

/// "ABA" style; the empty word renders as "e".
std::string format_word(const Word& w, Alphabet alphabet = Alphabet::AB);

/// Run-length rendering: "A^3 B^2". Unit exponents stay implicit ("A B A").
std::string format_word_powers(const Word& w, Alphabet alphabet = Alphabet::AB);

/// Parses "e" (the empty word) or a letter sequence. Whitespace between
/// letters is ignored; L/R are accepted as aliases of A/B when allow_lr is
/// set. Throws ParseError naming the offending character.
Word parse_word(std::string_view text, bool allow_lr = false);

/// Length-then-lexicographic order with A < B: the enumeration and reporting
/// order used by the collision search.
bool shortlex_less(const Word& x, const Word& y);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace freegen
