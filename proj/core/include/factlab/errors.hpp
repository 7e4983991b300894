#pragma once

#include <stdexcept>
#include <string>

namespace factlab {

// Base of every error raised by the library. The CLI maps subclasses to exit
// codes, so new failure kinds should derive from one of these.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the supported numeric range (e.g. n >= p for n!).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Operation undefined at this point of the domain (inverse of zero, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of the operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The requested computation exceeds the configured work budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A result failed its own verification; indicates a bug or a false identity.
class InternalError : public Error {
 public:
  using Error::Error;
};

// No factorial-product representation exists within the requested bounds.
class NotRepresentableError : public Error {
 public:
  using Error::Error;
};

}  // namespace factlab
