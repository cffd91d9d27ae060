#pragma once

#include <stdexcept>

namespace antimagic {

// Raised when family parameters, edge keys or labelings violate a precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an instance is too large for the requested route
// (materialized graph, exhaustive search, 64-bit sum arithmetic).
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Raised when a labeling file cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace antimagic
