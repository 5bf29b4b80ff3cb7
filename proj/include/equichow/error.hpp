#pragma once

#include <stdexcept>
#include <string>

namespace equichow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// A variable occurs in a polynomial but has no binding or target.
class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// A reduction strategy cannot be applied to a relation list.
class StrategyMismatch : public Error {
 public:
  using Error::Error;
};

/// A fixed-point operation was given an action with repeated weights.
class RepeatedWeights : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (e.g. a localization sum
/// that does not clear, or a golden comparison that drifted).
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace equichow
