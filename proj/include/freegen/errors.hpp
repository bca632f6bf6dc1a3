#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace freegen {

/// Raised when text input cannot be parsed. The message always names the
/// offending token so diagnostics can be surfaced verbatim.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string token, const std::string& expected)
      : std::runtime_error("parse error at '" + token + "': expected " + expected),
        token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace freegen
