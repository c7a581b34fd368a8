#pragma once

#include <stdexcept>
#include <string>

namespace slgen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary operation on values owned by different fields, rings or towers.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (field specs, polynomials, matrices).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value that should lie in a subfield does not.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

/// Internal invariant broken; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Mathematical precondition of an operation is not met.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotIrreducible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class RootsNotConsistent : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ConsistencyLost : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// (n, p) = (3, 3): sl_3 in characteristic 3 is not 2-generated.
class ExceptionalCase : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Characteristic 2 has no consistent sets; only random search applies.
class EvenCharacteristic : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class RetryBudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace slgen
