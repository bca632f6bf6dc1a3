#include "freegen/cli.hpp"

#include "freegen/certify.hpp"
#include "freegen/codec.hpp"
#include "freegen/errors.hpp"
#include "freegen/explore.hpp"
#include "freegen/mat2.hpp"
#include "freegen/word.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace freegen {

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsageOrInconclusive = 2;

struct PairOptions {
  std::string name;
  std::string a_text;
  std::string b_text;
};

struct ResolvedPair {
  Mat2 first;
  Mat2 second;
  bool lr_alphabet = false;  // the calkin-wilf pair keeps its traditional L/R letters
};

// Registers --pair/--a/--b on a subcommand that operates on a matrix pair.
void add_pair_options(CLI::App& sub, PairOptions& opts) {
  auto* pair = sub.add_option("--pair", opts.name,
                              "Named pair: calkin-wilf, sanov, or lu-rv:<u>:<v>");
  auto* a = sub.add_option("--a", opts.a_text, "First matrix, e.g. [[1,0],[1,1]]");
  auto* b = sub.add_option("--b", opts.b_text, "Second matrix");
  pair->excludes(a)->excludes(b);
  a->needs(b);
  b->needs(a);
}

ResolvedPair resolve_pair(const PairOptions& opts) {
  if (!opts.name.empty()) {
    auto [first, second] = named_pair(opts.name);
    return {std::move(first), std::move(second), opts.name == "calkin-wilf"};
  }
  if (opts.a_text.empty() || opts.b_text.empty()) {
    throw std::invalid_argument("provide either --pair <name> or both --a and --b");
  }
  return {Mat2::parse(opts.a_text), Mat2::parse(opts.b_text), false};
}

Alphabet alphabet_of(const ResolvedPair& pair) {
  return pair.lr_alphabet ? Alphabet::LR : Alphabet::AB;
}

// Certifies the pair or reports the definitive negative on the spot.
// Returns nullopt after printing when the pair is NotCovered.
std::optional<FreenessCertificate> require_certified(const ResolvedPair& pair, std::ostream& out,
                                                     std::ostream& err) {
  FreenessCertificate cert = check_free_pair(pair.first, pair.second);
  if (!cert.certified()) {
    out << "NOT-COVERED\n";
    err << cert.to_text();
    return std::nullopt;
  }
  return cert;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic toolkit for free monoids of 2x2 nonnegative matrices"};
  app.name("freegen");
  app.require_subcommand(1);

  PairOptions check_pair_opts;
  auto* check_cmd = app.add_subcommand(
      "check-free", "Certify that a matrix pair freely generates a monoid");
  add_pair_options(*check_cmd, check_pair_opts);

  PairOptions encode_pair_opts;
  std::string encode_word_text;
  auto* encode_cmd =
      app.add_subcommand("encode", "Multiply out a word over a certified pair");
  add_pair_options(*encode_cmd, encode_pair_opts);
  encode_cmd->add_option("--word", encode_word_text, "Word over A/B (L/R for calkin-wilf); e = empty")
      ->required();

  PairOptions decode_pair_opts;
  std::string decode_matrix_text;
  std::size_t decode_fuel = 4096;
  bool decode_powers = false;
  auto* decode_cmd = app.add_subcommand(
      "decode", "Recover the unique word producing a matrix, or reject it");
  add_pair_options(*decode_cmd, decode_pair_opts);
  decode_cmd->add_option("--matrix", decode_matrix_text, "Matrix to factor")->required();
  decode_cmd->add_option("--fuel", decode_fuel, "Step budget before giving up")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  decode_cmd->add_flag("--powers", decode_powers, "Collapse letter runs: A^3 B^2");

  std::size_t tree_depth = 0;
  auto* tree_cmd = app.add_subcommand("cw-tree", "Print Calkin-Wilf tree levels");
  tree_cmd->add_option("--depth", tree_depth, "Deepest level to print")
      ->required()
      ->check(CLI::Range(std::size_t{0}, std::size_t{24}));

  std::string path_rational_text;
  auto* path_cmd =
      app.add_subcommand("cw-path", "Descent word from the root to a positive rational");
  path_cmd->add_option("--rational", path_rational_text, "Target value, e.g. 2/5")->required();

  PairOptions collide_pair_opts;
  std::size_t collide_max_len = 0;
  unsigned collide_jobs = 1;
  auto* collide_cmd = app.add_subcommand(
      "collide", "Exhaustively search two matrices for distinct words with equal products");
  add_pair_options(*collide_cmd, collide_pair_opts);
  collide_cmd->add_option("--max-len", collide_max_len, "Longest word length to try (<= 24)")
      ->required()
      ->check(CLI::PositiveNumber);
  collide_cmd->add_option("--jobs", collide_jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitPositive;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrInconclusive;
  }

  try {
    if (check_cmd->parsed()) {
      const ResolvedPair pair = resolve_pair(check_pair_opts);
      const FreenessCertificate cert = check_free_pair(pair.first, pair.second);
      out << cert.to_text();
      return cert.certified() ? kExitPositive : kExitNegative;
    }

    if (encode_cmd->parsed()) {
      const ResolvedPair pair = resolve_pair(encode_pair_opts);
      const auto cert = require_certified(pair, out, err);
      if (!cert) return kExitNegative;
      const Word word = parse_word(encode_word_text, pair.lr_alphabet);
      out << encode(word, *cert).str() << "\n";
      return kExitPositive;
    }

    if (decode_cmd->parsed()) {
      const ResolvedPair pair = resolve_pair(decode_pair_opts);
      const auto cert = require_certified(pair, out, err);
      if (!cert) return kExitNegative;
      const Mat2 matrix = Mat2::parse(decode_matrix_text);
      const DecodeOutcome outcome = decode(matrix, *cert, decode_fuel);
      const Alphabet alphabet = alphabet_of(pair);
      if (const auto* member = std::get_if<Member>(&outcome)) {
        out << (decode_powers ? format_word_powers(member->word, alphabet)
                              : format_word(member->word, alphabet))
            << "\n";
        return kExitPositive;
      }
      if (const auto* reject = std::get_if<NotMember>(&outcome)) {
        out << "NOT-MEMBER(" << to_string(reject->reason) << ")\n";
        return kExitNegative;
      }
      const auto& exhausted = std::get<FuelExhausted>(outcome);
      out << "INCONCLUSIVE: FUEL-EXHAUSTED(steps=" << exhausted.steps
          << ", partial=" << format_word(exhausted.partial, alphabet) << ")\n";
      return kExitUsageOrInconclusive;
    }

    if (tree_cmd->parsed()) {
      const auto levels = cw_tree(tree_depth);
      for (const auto& level : levels) {
        for (std::size_t i = 0; i < level.size(); ++i) {
          if (i > 0) out << ' ';
          out << level[i].value.str();
        }
        out << '\n';
      }
      return kExitPositive;
    }

    if (path_cmd->parsed()) {
      const Rational target = Rational::parse(path_rational_text);
      out << format_word(cw_path(target), Alphabet::LR) << "\n";
      return kExitPositive;
    }

    if (collide_cmd->parsed()) {
      const ResolvedPair pair = resolve_pair(collide_pair_opts);
      const CollisionReport report =
          collision_search(pair.first, pair.second, collide_max_len, collide_jobs);
      out << report.to_text();
      return report.collision ? kExitNegative : kExitPositive;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrInconclusive;
  }

  err << "error: no subcommand selected\n";
  return kExitUsageOrInconclusive;
}

}  // namespace freegen
