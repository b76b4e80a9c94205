#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dqc {

enum class ErrorKind {
  NotPrime,
  NotComplexifiable,
  UnsupportedPrime,
  DivisionByZero,
  DimensionMismatch,
  InvalidArgument,
  NotUnitNorm,
  NonRealExpectation,
  ZeroVector,
  BudgetExceeded,
  VerificationFailed,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dqc
