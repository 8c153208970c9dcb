#pragma once

#include <stdexcept>
#include <string>

namespace recipwalk {

/// Raised when an argument is outside the domain an operation is defined on.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a numerical self-check fails. Indicates a bug, not bad input.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace recipwalk
