#pragma once

#include <stdexcept>
#include <string>

namespace gaussq {

// Base of every error raised by the library. The subclass says which kind
// of failure it was; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something outside an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed text (angles, numbers).
class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An exact result would leave the representable range.
class OverflowError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A configured resource cap (lattice points, sieve range, iterations) would
// be exceeded. Never a statement about mathematical nonexistence.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A result failed its own re-verification.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaussq
