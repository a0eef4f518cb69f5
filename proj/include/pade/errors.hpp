#ifndef PADE_ERRORS_HPP
#define PADE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pade {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by malformed or unusable input data.
class InputError : public Error {
 public:
  using Error::Error;
};

class PoleAtCenter : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EmptyInput : public InputError {
 public:
  using InputError::InputError;
};

class InsufficientCoefficients : public InputError {
 public:
  using InputError::InputError;
};

class CenterMismatch : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfFamily : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// The numerical kernel of T_{mu1+1} is not one-dimensional under the
/// tolerance in use.
class KernelDimensionMismatch : public Error {
 public:
  KernelDimensionMismatch(std::size_t dimension, const std::string& what)
      : Error(what), dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

}  // namespace pade

#endif  // PADE_ERRORS_HPP
