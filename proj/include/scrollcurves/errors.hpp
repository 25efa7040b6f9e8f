#pragma once

#include <stdexcept>
#include <string>

namespace scrollcurves {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact integer computation left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A documented hypothesis of an operation does not hold for its arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed (inexact division,
/// negative dimension, insufficient table margin). Always a bug or a
/// violated hypothesis upstream, never rounded away.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed user-facing input (text that does not parse, parity violations).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace scrollcurves
