#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cjac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed curve data: unknown vertex, negative genus, disconnected graph.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Total degree of a multidegree does not match what the operation requires.
class DegreeMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An exponential enumeration would exceed its configured limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InvalidInput(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cjac
