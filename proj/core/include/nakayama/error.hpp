#pragma once

#include <stdexcept>
#include <string>

namespace nakayama {

/// Malformed textual literal. `token()` is the offending fragment of input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what + ": '" + token + "'"), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// A structural guarantee of the theory did not hold (e.g. a nonsimple
/// member of a complete sequence without exactly one chain). Seeing this
/// means the input was not what the caller claimed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nakayama
