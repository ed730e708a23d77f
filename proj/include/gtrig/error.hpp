#pragma once

#include <stdexcept>
#include <string>

namespace gtrig {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An iterative method exhausted its iteration or evaluation budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// The integrand returned NaN or infinity at an interior node.
class NonFiniteIntegrand : public Error {
 public:
  using Error::Error;
};

// The target value is not bracketed by the function values at the interval ends.
class BracketError : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

}  // namespace gtrig
