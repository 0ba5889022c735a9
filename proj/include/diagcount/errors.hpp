#pragma once

#include <stdexcept>
#include <string>

namespace diagcount {

/// Error categories raised across the library. The CLI maps these onto exit
/// codes, the Python bindings onto ValueError / ArithmeticError.
enum class Errc {
  NotPrime,
  BudgetExceeded,
  IrreducibleSearchExhausted,
  SubfieldMismatch,
  ZeroHasNoDlog,
  OrderDoesNotDivide,
  TrivialCharacter,
  NonResidue,
  NoRepresentation,
  MixedGroundPrime,
  ImpureResult,
  UnsupportedResidue,
  OrderNotDividing,
  BelowThreshold,
  InvalidArgument,
  TooLarge,
  ResidualTooLarge,
  CoprimalityViolation,
  DivisibilityViolation,
  NotSemiprimitive,
  OddK,
  DegenerateForm,
  Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// True for errors caused by the caller's input (as opposed to failures of
/// the library's own verification machinery).
bool is_validation_error(Errc code) noexcept;

}  // namespace diagcount
