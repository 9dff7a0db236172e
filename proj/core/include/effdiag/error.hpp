#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace effdiag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two monadic values (or a value and a Kleisli result) live in different monads.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// Wrong number of arguments, out-of-range indices, or an arity cap overflow.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// An operation or index that the chosen monad does not provide.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Value violating a type invariant (mass > 1, malformed store map, ...).
class InvalidValue : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        offset_(offset),
        line_(line),
        column_(column) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

class OpenTermError : public Error {
 public:
  using Error::Error;
};

/// Evaluation reached a term with no semantics (e.g. applying a constant).
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace effdiag
