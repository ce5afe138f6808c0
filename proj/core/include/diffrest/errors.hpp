#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffrest {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class DivisionError : public Error {
 public:
  using Error::Error;
};

class InvalidRestrictionSet : public Error {
 public:
  explicit InvalidRestrictionSet(const std::string& denominator)
      : Error("invalid restriction set: denominator " + denominator +
              " is not in the closure of the generators"),
        denominator_(denominator) {}
  const std::string& denominator() const { return denominator_; }

 private:
  std::string denominator_;
};

class EqualityUndecided : public Error {
 public:
  explicit EqualityUndecided(const std::string& where)
      : Error("equality undecided: " + where) {}
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class IncompatibleJoin : public Error {
 public:
  using Error::Error;
};

// A library invariant was broken; indicates a bug rather than bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace diffrest
