#ifndef SOLVCERT_ERRORS_HPP
#define SOLVCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solvcert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input errors. The CLI maps every InputError to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ArityError : public InputError {
 public:
  using InputError::InputError;
};

class FieldError : public InputError {
 public:
  using InputError::InputError;
};

class ZeroPolynomialError : public InputError {
 public:
  using InputError::InputError;
};

class SingularMatrixError : public InputError {
 public:
  using InputError::InputError;
};

class NotAdmissibleError : public InputError {
 public:
  using InputError::InputError;
};

class InfiniteDimensionalError : public InputError {
 public:
  using InputError::InputError;
};

class NotHomogeneousError : public InputError {
 public:
  using InputError::InputError;
};

class TooLargeError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised when rules of opposite polarity fire on one algebra. Always a bug.
class ConflictError : public Error {
 public:
  using Error::Error;
};

}  // namespace solvcert

#endif  // SOLVCERT_ERRORS_HPP
