#pragma once

#include <stdexcept>

namespace ergm {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative method ran out of iterations.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed its work budget (e.g. too many block tuples).
class ComplexityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ergm
