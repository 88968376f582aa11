#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autfn {

// Raised when textual input (words, automorphism expressions, vectors) does
// not match its grammar. `position` is the 0-based character offset of the
// offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  // The message without the position suffix.
  std::string const& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

// Raised when an operation is called outside its domain: mismatched ranks,
// out-of-range generator indices, non-stabilizing automorphisms, degenerate
// geometric input and so on.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace autfn
