#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hermilat {

enum class ErrorCode {
  NonPrime,
  ReducibleModulus,
  OddDegreeFrobenius,
  FieldTooLarge,
  BadModulus,
  InvalidElement,
  DivisionByZero,
  NonSquareGram,
  DimensionCap,
  LengthMismatch,
  DegenerateSpace,
  NotOrthosymmetric,
  ZeroScale,
  FieldMismatch,
  Infeasible,
  EnumerationCap,
  NotRegularElement,
  NotStarRegular,
  NotASummand,
  KernelNotRegular,
  PreimageMismatch,
  BadIdempotent,
  RankNotOne,
  NotAHom,
  NotALattice,
  CongruenceCap,
  PrimeIncompatibleCongruence,
  SizeCap,
  NotPolarityCML,
  NotAtomic,
  NoCompatibleEmbedding,
  EpsilonMismatch,
  NotRegular,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code is stable and machine
/// readable; the message carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hermilat
