#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transint {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different variable contexts (or a context/order mismatch).
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exponent or size arithmetic would leave the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity that must hold did not. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of a theorem-driven check failed (e.g. not a regular sequence).
class PreconditionError : public Error {
 public:
  PreconditionError(std::string what, std::size_t stage = 0)
      : Error(std::move(what)), stage_(stage) {}

  /// 1-based stage at which the precondition failed, 0 when not staged.
  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace transint
