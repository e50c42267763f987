// SPDX-License-Identifier: Apache-2.0
#include "aoa/numeric.hpp"

#include "aoa/error.hpp"

namespace aoa {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<PrimePower> prime_power(std::uint64_t n) noexcept {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    auto r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit) noexcept {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  if (r > limit) return std::nullopt;
  return r;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NoSuchElement: return "NoSuchElement";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EncodingOutOfRange: return "EncodingOutOfRange";
    case Errc::IoError: return "IoError";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::DeskGuardExceeded: return "DeskGuardExceeded";
    case Errc::TooFewColumns: return "TooFewColumns";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::WrongParameters: return "WrongParameters";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::StrengthTooHigh: return "StrengthTooHigh";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::OddK: return "OddK";
    case Errc::ParameterMismatch: return "ParameterMismatch";
    case Errc::WrongShape: return "WrongShape";
    case Errc::AdderMissing: return "AdderMissing";
    case Errc::NoKnownConstruction: return "NoKnownConstruction";
    case Errc::PropertyOneFailed: return "PropertyOneFailed";
    case Errc::PropertyTwoFailed: return "PropertyTwoFailed";
    case Errc::NotMds: return "NotMds";
    case Errc::BadField: return "BadField";
    case Errc::ParameterViolation: return "ParameterViolation";
    case Errc::BadModulus: return "BadModulus";
    case Errc::NotFoundWithinBudget: return "NotFoundWithinBudget";
    case Errc::NoCompleteMappingKnown: return "NoCompleteMappingKnown";
    case Errc::NotInCatalog: return "NotInCatalog";
  }
  return "Unknown";
}

}  // namespace aoa
