#include "freegen/word.hpp"

#include "freegen/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace freegen {

namespace {

char letter_char(Letter l, Alphabet alphabet) {
  if (alphabet == Alphabet::LR) return l == Letter::A ? 'L' : 'R';
  return l == Letter::A ? 'A' : 'B';
}

}  // namespace

std::string format_word(const Word& w, Alphabet alphabet) {
  if (w.empty()) return "e";
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(letter_char(l, alphabet));
  return out;
}

std::string format_word_powers(const Word& w, Alphabet alphabet) {
  if (w.empty()) return "e";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t run = 1;
    while (i + run < w.size() && w[i + run] == w[i]) ++run;
    if (!out.empty()) out.push_back(' ');
    out.push_back(letter_char(w[i], alphabet));
    if (run > 1) {
      out.push_back('^');
      out += std::to_string(run);
    }
    i += run;
  }
  return out;
}

Word parse_word(std::string_view text, bool allow_lr) {
  Word word;
  bool saw_empty_marker = false;
  bool saw_letter = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'e' && !saw_letter && !saw_empty_marker) {
      saw_empty_marker = true;
      continue;
    }
    if (saw_empty_marker) throw ParseError(std::string(1, c), "nothing after the empty word \"e\"");
    switch (c) {
      case 'A':
        word.push_back(Letter::A);
        break;
      case 'B':
        word.push_back(Letter::B);
        break;
      case 'L':
      case 'R':
        if (!allow_lr) {
          throw ParseError(std::string(1, c), "letter 'A' or 'B' (L/R apply to the calkin-wilf pair only)");
        }
        word.push_back(c == 'L' ? Letter::A : Letter::B);
        break;
      default:
        throw ParseError(std::string(1, c),
                         allow_lr ? "word letter 'A', 'B', 'L' or 'R'" : "word letter 'A' or 'B'");
    }
    saw_letter = true;
  }
  if (!saw_letter && !saw_empty_marker) throw ParseError("end of input", "a word or \"e\"");
  return word;
}

bool shortlex_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_word(w); }

}  // namespace freegen
