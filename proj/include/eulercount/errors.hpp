#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eulercount {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input supplied by the caller: malformed files, out-of-range ids,
/// arguments outside an operation's domain.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OddDegree : public InputError {
 public:
  explicit OddDegree(unsigned vertex)
      : InputError("vertex " + std::to_string(vertex) + " has odd degree"),
        vertex_(vertex) {}

  unsigned vertex() const noexcept { return vertex_; }

 private:
  unsigned vertex_;
};

class InvalidOrb : public InputError {
 public:
  using InputError::InputError;
};

class InvalidCircuit : public InputError {
 public:
  using InputError::InputError;
};

class NotInvertible : public InputError {
 public:
  using InputError::InputError;
};

class MalformedClause : public InputError {
 public:
  using InputError::InputError;
};

class PrimeTooSmall : public InputError {
 public:
  using InputError::InputError;
};

/// The enumeration node budget was exhausted before the search finished.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed (e.g. a division that must be exact was not).
/// Always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class NonExactDivision : public InternalError {
 public:
  using InternalError::InternalError;
};

/// Raised by the reduction driver when an oracle throws or returns residues
/// that disagree with each other.
class OracleFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace eulercount
