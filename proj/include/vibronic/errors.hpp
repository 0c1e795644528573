#pragma once

#include <stdexcept>
#include <string>

namespace vibronic {

// Invalid physical or indexing input (bad quantum number, unnormalized state, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical procedure failed to meet its accuracy contract (quadrature, eigensolver, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vibronic
