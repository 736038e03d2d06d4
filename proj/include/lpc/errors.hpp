#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpc {

/// Shapes or lengths of operands do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the mathematical domain of an operation
/// (reducible modulus, non-divisor of x^l - 1, bad weight precondition...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Supported in principle but deliberately not implemented (even l CRT, ...).
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive search would exceed the caller's budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double required)
      : std::runtime_error(what), required_(required) {}
  double required() const noexcept { return required_; }

 private:
  double required_;
};

/// A structural invariant does not hold (HX * HZ^T != 0, d^2 != 0, ...).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lpc
