#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixtau {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or rational text. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public ParseError {
 public:
  UnknownVariableError(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// An exponent, Frobenius level or rational left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A configured computation budget (pairs, degree, search cap) was exhausted.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// The chain of root ideals did not repeat within the Frobenius level budget.
class NotStabilizedError : public Error {
 public:
  explicit NotStabilizedError(unsigned e_max, const std::string& where = {})
      : Error("test ideal chain did not stabilize up to level e_max=" + std::to_string(e_max) +
              (where.empty() ? std::string() : " at " + where)),
        e_max_(e_max) {}

  unsigned e_max() const noexcept { return e_max_; }

 private:
  unsigned e_max_;
};

/// Caller supplied arguments that violate an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The containment search never failed up to its cap: a^r is not in rad(I).
class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// v_number on the unit ideal: every power is contained, there is no maximum.
class ZeroRegionError : public Error {
 public:
  using Error::Error;
};

/// An internal algebraic invariant failed. Indicates a bug, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace mixtau
