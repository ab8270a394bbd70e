#pragma once

#include <stdexcept>
#include <string>

namespace twl {

enum class ErrorKind {
  NotPrime,
  TowerTooLarge,
  BaseNotCoprime,
  InvalidArgument,
  BudgetExceeded,
  ZeroPair,
  NonconformingSpec,
  PrincipalCharacter,
  DegenerateTower,
  NotCoprime,
  DivisibleByRMinusOne,
  NotPowerCongruent,
  PreconditionViolated,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace twl
