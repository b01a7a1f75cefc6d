#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beba {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied an argument outside the operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A well-formed request whose modelling precondition does not hold
/// (disconnected graph, baseline outcome mismatch, threshold hypothesis).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A randomized generator exhausted its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace beba
