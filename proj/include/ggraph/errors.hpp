#pragma once

#include <stdexcept>
#include <string>

namespace ggraph {

// Raised when an operation's documented precondition does not hold
// (index out of range, entry already present, non-standard tableau, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised for malformed textual input (permutation strings, JSON documents).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ggraph
