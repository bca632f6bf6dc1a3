#include "freegen/explore.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

namespace freegen {

std::pair<Rational, Rational> cw_children(const Rational& t) {
  if (t <= Rational(0)) {
    throw std::domain_error("Calkin-Wilf values are positive rationals, got " + t.str());
  }
  const Rational one = 1;
  return {t / (t + one), t + one};
}

std::vector<std::vector<CwNode>> cw_tree(std::size_t depth) {
  std::vector<std::vector<CwNode>> levels;
  levels.reserve(depth + 1);
  levels.push_back({CwNode{Rational(1), {}}});
  for (std::size_t d = 0; d < depth; ++d) {
    const auto& prev = levels.back();
    std::vector<CwNode> next;
    next.reserve(prev.size() * 2);
    for (const CwNode& node : prev) {
      auto [left, right] = cw_children(node.value);
      Word left_path = node.path;
      left_path.push_back(Letter::A);
      Word right_path = node.path;
      right_path.push_back(Letter::B);
      next.push_back({std::move(left), std::move(left_path)});
      next.push_back({std::move(right), std::move(right_path)});
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

Word cw_path(const Rational& q) {
  const Rational zero;
  const Rational one = 1;
  if (q <= zero) {
    throw std::domain_error("Calkin-Wilf values are positive rationals, got " + q.str());
  }
  Word reversed;
  Rational current = q;
  while (current != one) {
    if (current > one) {
      reversed.push_back(Letter::B);
      current = current - one;
    } else {
      reversed.push_back(Letter::A);
      current = current / (one - current);
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

namespace {

// Words of length <= 24 packed as (length, letter bits) with the first letter
// at the most significant bit; numeric order of the packed value is exactly
// shortlex order.
constexpr std::uint64_t kNoWord = std::numeric_limits<std::uint64_t>::max();

std::uint64_t pack_word(std::uint32_t len, std::uint32_t bits) {
  return (static_cast<std::uint64_t>(len) << 32) | bits;
}

Word unpack_word(std::uint64_t packed) {
  const auto len = static_cast<std::uint32_t>(packed >> 32);
  const auto bits = static_cast<std::uint32_t>(packed & 0xffffffffu);
  Word w(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    w[i] = ((bits >> (len - 1 - i)) & 1u) != 0 ? Letter::B : Letter::A;
  }
  return w;
}

// The two shortlex-smallest words seen for one product. Merging candidate
// sets is order-independent, which is what makes the parallel search
// deterministic.
struct WordPair {
  std::uint64_t first = kNoWord;
  std::uint64_t second = kNoWord;

  void offer(std::uint64_t w) {
    if (w == kNoWord || w == first) return;
    if (w < first) {
      second = first;
      first = w;
    } else if (w < second) {
      second = w;
    }
  }

  void merge(const WordPair& other) {
    offer(other.first);
    offer(other.second);
  }
};

using ProductTable = std::unordered_map<Mat2, WordPair>;

// Records every strict extension of the given prefix up to max_len.
void enumerate_extensions(const Mat2& gen_a, const Mat2& gen_b, const Mat2& prefix_product,
                          std::uint32_t prefix_len, std::uint32_t prefix_bits,
                          std::uint32_t max_len, ProductTable& table) {
  if (prefix_len == max_len) return;
  for (std::uint32_t letter = 0; letter < 2; ++letter) {
    const Mat2 product = prefix_product * (letter != 0 ? gen_b : gen_a);
    const std::uint32_t len = prefix_len + 1;
    const std::uint32_t bits = (prefix_bits << 1) | letter;
    table[product].offer(pack_word(len, bits));
    enumerate_extensions(gen_a, gen_b, product, len, bits, max_len, table);
  }
}

Mat2 product_of_bits(const Mat2& gen_a, const Mat2& gen_b, std::uint32_t len,
                     std::uint32_t bits) {
  Mat2 product;
  for (std::uint32_t i = 0; i < len; ++i) {
    product = product * (((bits >> (len - 1 - i)) & 1u) != 0 ? gen_b : gen_a);
  }
  return product;
}

Mat2 product_of_word(const Mat2& gen_a, const Mat2& gen_b, const Word& w) {
  Mat2 product;
  for (Letter l : w) product = product * (l == Letter::B ? gen_b : gen_a);
  return product;
}

}  // namespace

std::string CollisionReport::to_text() const {
  std::ostringstream os;
  os << "pair.a: " << a.str() << "\n";
  os << "pair.b: " << b.str() << "\n";
  os << "max_len: " << max_len << "\n";
  os << "words_enumerated: " << words_enumerated << "\n";
  if (collision) {
    os << "result: Collision\n";
    os << "word1: " << format_word(collision->word1) << "\n";
    os << "word2: " << format_word(collision->word2) << "\n";
    os << "product: " << collision->product.str() << "\n";
  } else {
    os << "result: None\n";
  }
  return os.str();
}

CollisionReport collision_search(const Mat2& a, const Mat2& b, std::size_t max_len,
                                 unsigned jobs) {
  if (max_len < 1) throw std::invalid_argument("collision search needs max_len >= 1");
  if (max_len > 24) {
    throw std::invalid_argument(
        "collision search with max_len > 24 refused: the product table would hold more than 2^25 "
        "matrices");
  }
  const auto len_cap = static_cast<std::uint32_t>(max_len);

  ProductTable table;
  if (jobs <= 1 || max_len < 2) {
    enumerate_extensions(a, b, Mat2{}, 0, 0, len_cap, table);
  } else {
    // Seed all words up to the split depth, then let workers fill in the
    // subtree below each word of exactly that depth.
    const std::uint32_t split = std::min(
        len_cap, std::min<std::uint32_t>(8, static_cast<std::uint32_t>(std::bit_width(jobs)) + 1));
    enumerate_extensions(a, b, Mat2{}, 0, 0, split, table);

    const std::uint32_t task_count = 1u << split;
    std::atomic<std::uint32_t> next_task{0};
    const unsigned worker_count = std::min<unsigned>(jobs, task_count);
    std::vector<ProductTable> partials(worker_count);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back([&, w] {
        for (;;) {
          const std::uint32_t task = next_task.fetch_add(1);
          if (task >= task_count) return;
          const Mat2 prefix = product_of_bits(a, b, split, task);
          enumerate_extensions(a, b, prefix, split, task, len_cap, partials[w]);
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& partial : partials) {
      for (const auto& [product, words] : partial) table[product].merge(words);
    }
  }

  CollisionReport report;
  report.a = a;
  report.b = b;
  report.max_len = max_len;
  report.words_enumerated = (std::uint64_t{2} << max_len) - 2;

  const Mat2* best_product = nullptr;
  std::uint64_t best_first = kNoWord;
  std::uint64_t best_second = kNoWord;
  for (const auto& [product, words] : table) {
    if (words.second < best_second) {
      best_product = &product;
      best_first = words.first;
      best_second = words.second;
    }
  }

  if (best_product != nullptr) {
    Collision found{unpack_word(best_first), unpack_word(best_second), *best_product};
    const Mat2 check1 = product_of_word(a, b, found.word1);
    const Mat2 check2 = product_of_word(a, b, found.word2);
    if (check1 != found.product || check2 != found.product || found.word1 == found.word2 ||
        !shortlex_less(found.word1, found.word2)) {
      throw std::logic_error("collision self-check failed");
    }
    report.collision = std::move(found);
  }
  return report;
}

}  // namespace freegen
