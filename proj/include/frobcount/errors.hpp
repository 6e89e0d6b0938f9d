#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobcount {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial or input document. `line` is 0 when the source was a
// single string rather than a document.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), reason_(what), line_(line), column_(column) {}

  // The message without the position suffix.
  const std::string& reason() const { return reason_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what + " (at column " + std::to_string(column) + ")";
    return what + " (at line " + std::to_string(line) + ", column " +
           std::to_string(column) + ")";
  }

  std::string reason_;
  std::size_t line_;
  std::size_t column_;
};

// Operands live in different rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

// A precondition of a mathematical operation does not hold (unit ideal where a
// proper ideal is required, generator outside the maximal ideal, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size limit would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The requested verdict cannot be decided from the available information.
class Undecidable : public Error {
 public:
  using Error::Error;
};

}  // namespace frobcount
