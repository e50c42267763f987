// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aoa {

enum class Errc {
  NotPrime,
  DegreeZero,
  DivisionByZero,
  NoSuchElement,
  DimensionMismatch,
  EncodingOutOfRange,
  IoError,
  SchemaViolation,
  InvariantViolation,
  DeskGuardExceeded,
  TooFewColumns,
  VerificationFailed,
  WrongParameters,
  NotPrimePower,
  StrengthTooHigh,
  BadCharacteristic,
  OddK,
  ParameterMismatch,
  WrongShape,
  AdderMissing,
  NoKnownConstruction,
  PropertyOneFailed,
  PropertyTwoFailed,
  NotMds,
  BadField,
  ParameterViolation,
  BadModulus,
  NotFoundWithinBudget,
  NoCompleteMappingKnown,
  NotInCatalog,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the CLI
/// maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace aoa
