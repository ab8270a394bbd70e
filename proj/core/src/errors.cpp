#include "twl/errors.hpp"

namespace twl {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TowerTooLarge: return "TowerTooLarge";
    case ErrorKind::BaseNotCoprime: return "BaseNotCoprime";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ZeroPair: return "ZeroPair";
    case ErrorKind::NonconformingSpec: return "NonconformingSpec";
    case ErrorKind::PrincipalCharacter: return "PrincipalCharacter";
    case ErrorKind::DegenerateTower: return "DegenerateTower";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::DivisibleByRMinusOne: return "DivisibleByRMinusOne";
    case ErrorKind::NotPowerCongruent: return "NotPowerCongruent";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

}  // namespace twl
