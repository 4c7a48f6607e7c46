#pragma once

#include <stdexcept>
#include <string>

namespace cabling {

// Malformed or invalid input (bad grammar, non-coprime pair, q <= 1, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Input is well formed but outside the domain an operation is defined on,
// e.g. a range request for a knot that is not in class K-breve.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Two independent computations of the same quantity disagreed. Never
// expected to fire; reaching it means a bug.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cabling
