#include "diagcount/errors.hpp"

namespace diagcount {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::IrreducibleSearchExhausted: return "IrreducibleSearchExhausted";
    case Errc::SubfieldMismatch: return "SubfieldMismatch";
    case Errc::ZeroHasNoDlog: return "ZeroHasNoDlog";
    case Errc::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case Errc::TrivialCharacter: return "TrivialCharacter";
    case Errc::NonResidue: return "NonResidue";
    case Errc::NoRepresentation: return "NoRepresentation";
    case Errc::MixedGroundPrime: return "MixedGroundPrime";
    case Errc::ImpureResult: return "ImpureResult";
    case Errc::UnsupportedResidue: return "UnsupportedResidue";
    case Errc::OrderNotDividing: return "OrderNotDividing";
    case Errc::BelowThreshold: return "BelowThreshold";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
    case Errc::CoprimalityViolation: return "CoprimalityViolation";
    case Errc::DivisibilityViolation: return "DivisibilityViolation";
    case Errc::NotSemiprimitive: return "NotSemiprimitive";
    case Errc::OddK: return "OddK";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_validation_error(Errc code) noexcept {
  switch (code) {
    case Errc::ImpureResult:
    case Errc::ResidualTooLarge:
    case Errc::IrreducibleSearchExhausted:
    case Errc::Internal:
      return false;
    default:
      return true;
  }
}

}  // namespace diagcount
