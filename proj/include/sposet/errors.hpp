#pragma once

#include <stdexcept>
#include <string>

namespace sposet {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: bad token, index out of range, unknown command.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Raised when a text document fails to parse. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// The positive linear closure of the generators contains some root and its negative.
class AsymmetryViolation : public InputError {
 public:
  using InputError::InputError;
};

/// A relation set that should be a strict order contains a cycle.
class CycleDetected : public InputError {
 public:
  using InputError::InputError;
};

/// A halfspace system has no derivable bounding box.
class UnboundedSystem : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured size guard.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A structural result that must hold failed to hold. Always a bug or a
/// counterexample, never an input problem.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class OracleMismatch : public InternalInconsistency {
 public:
  using InternalInconsistency::InternalInconsistency;
};

}  // namespace sposet
