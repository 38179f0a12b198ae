#pragma once

#include <stdexcept>
#include <string>

namespace orbitope_kit {

/// Precondition or domain failure. `code()` is a stable kebab-case tag
/// ("empty-configuration", "degenerate-configuration", ...) that callers and
/// the CLI can match on; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Raised when a computed result violates a proven guarantee. Seeing one of
/// these means a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orbitope_kit
