#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omegalex {

enum class ErrorKind {
  validation,
  range,
  overflow,
  compatibility,
  argument,
  budget,
  parse,
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the family text reader; line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when an exhaustive enumeration would exceed its candidate budget.
// required() is the exact candidate count as a decimal string, since it may
// not fit in any machine integer.
class BudgetError : public Error {
 public:
  BudgetError(std::string required, const std::string& what)
      : Error(ErrorKind::budget, what), required_(std::move(required)) {}

  const std::string& required() const noexcept { return required_; }

 private:
  std::string required_;
};

}  // namespace omegalex
