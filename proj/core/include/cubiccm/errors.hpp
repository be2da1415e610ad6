#pragma once

#include <stdexcept>
#include <string>

namespace cubiccm {

// Base of every error raised for mathematically invalid input. The CLI maps
// these to exit code 3.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IndefiniteError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedFieldError : public DomainError {
 public:
  using DomainError::DomainError;
};

class BadPrimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class GuardExceededError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Internal consistency failure (e.g. a q-expansion coefficient that is not a
// rational integer). Never expected on valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubiccm
