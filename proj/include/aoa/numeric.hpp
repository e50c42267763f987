// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace aoa {

/// Trial-division primality; adequate for alphabet sizes up to ~10^9.
bool is_prime(std::uint64_t n) noexcept;

struct PrimePower {
  std::uint64_t p;
  unsigned m;
};

/// Returns (p, m) with n = p^m, or nullopt when n is not a prime power.
std::optional<PrimePower> prime_power(std::uint64_t n) noexcept;

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// Integer power; returns nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t limit = UINT64_MAX) noexcept;

/// base^exp, assuming the caller has already ruled out overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept;

/// Calls `f(subset)` for every `r`-subset of {0, ..., n-1} in lexicographic
/// order; stops early and returns false once `f` returns false.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return true;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace aoa
