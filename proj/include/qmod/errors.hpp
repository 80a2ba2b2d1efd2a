#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmod {

/// Malformed or mismatched arguments (wrong vector sizes, zero framing, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Slope requested for the zero dimension vector.
class UndefinedSlopeError : public InputError {
 public:
  UndefinedSlopeError() : InputError("slope of the zero dimension vector is undefined") {}
};

/// A documented precondition of an operation does not hold (e.g. non-coprime d).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A local quiver datum would need a negative number of arrows.
class InfeasibleTypeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Polynomial division that was required to be exact left a remainder.
class DivisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not, or an asserted structural law failed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Quiver file syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qmod
