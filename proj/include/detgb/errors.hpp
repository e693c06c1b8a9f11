#pragma once

#include <stdexcept>
#include <string>

namespace detgb {

/// Invalid input to a mathematical operation (zero polynomial where a
/// leading term is needed, index out of range, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Operands that live in different polynomial rings.
class ContextError : public std::invalid_argument {
 public:
  explicit ContextError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed polynomial, shape or tuple text.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace detgb
