#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hollow {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (bad family
/// parameters, order out of range, missing operand, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.  offset() is the byte position of the first
/// offending byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A matrix violates the zero/nonzero pattern it is required to realize.
class PatternViolation : public Error {
 public:
  using Error::Error;
};

/// A requested target fails a feasibility condition of the construction.
class InfeasibleTarget : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of the operation does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Numeric failure: iteration did not converge or retries were exhausted.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget.  Inconclusive: not a refutation.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace hollow
