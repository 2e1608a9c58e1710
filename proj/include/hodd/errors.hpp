#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hodd {

// Base class for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejected arithmetic such as 0·∞ or +∞ + −∞.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Wrong dimension, NaN input, base point outside dom f, bad schedule.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Tensor order or dimension above the supported storage cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A derivative that is not defined, e.g. Dini order n with an infinite
// lower-order derivative, or a subdifferential test whose lower orders fail.
class UndefinedError : public Error {
 public:
  using Error::Error;
};

// Expression syntax error. position() is 1-based into the source text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Failure while evaluating a parsed expression (division by zero, overflow).
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hodd
