#pragma once

#include <stdexcept>
#include <string>

namespace minrank {

// Raised when caller-supplied parameters violate an operation's preconditions.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when inputs are structurally incompatible (e.g. inner dimensions of a
// product disagree). Always a caller bug.
class DimensionError : public std::logic_error {
 public:
  explicit DimensionError(const std::string& what) : std::logic_error(what) {}
};

// Raised when a certified quantity fails its own verification. Seeing one of
// these means an implementation bug, never a property of the input.
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text or JSON input.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minrank
