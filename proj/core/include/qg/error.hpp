#pragma once

#include <stdexcept>
#include <string>

namespace qg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A scalar has a pole (or 0/0) at the requested evaluation point.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(format(msg, line, column)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
  }
  int line_;
  int column_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the supported regime of a construction.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug or malformed input data.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Haar evaluation needs a larger spin cutoff than the basis provides.
class CutoffTooSmall : public Error {
 public:
  CutoffTooSmall(const std::string& msg, int required_twice_l)
      : Error(msg), required_twice_l_(required_twice_l) {}
  /// Twice the smallest sufficient cutoff.
  int required_twice_l() const { return required_twice_l_; }

 private:
  int required_twice_l_;
};

}  // namespace qg
