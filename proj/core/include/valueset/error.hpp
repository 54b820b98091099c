#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace valueset {

enum class ErrorKind {
  NotPrime,
  NotIrreducible,
  NotMonic,
  OrderTooLarge,
  DivisionByZero,
  SingularMatrix,
  FieldMismatch,
  SyntaxError,
  DegreeCapExceeded,
  ZeroPolynomial,
  NonIntegralResult,
  EvenCharacteristic,
  PrimeTooSmall,
  DeskScaleExceeded,
  ClauseTooLong,
  InvalidArgument,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace valueset
