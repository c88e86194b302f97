#pragma once

#include <stdexcept>
#include <string>

namespace disbessel {

/// Bad arguments from the caller (negative half-size, order out of range, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-finite arguments.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal cross-check failed, e.g. a non-vanishing imaginary part.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace disbessel
