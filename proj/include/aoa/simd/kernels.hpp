// SPDX-License-Identifier: Apache-2.0
#pragma once

// Data-parallel inner loops of the verifier. Every kernel has a scalar
// reference in aoa::simd::scalar; vector variants live in aoa::simd::avx2 and
// aoa::simd::neon and are selected at runtime. The dispatching entry points in
// aoa::simd must produce results identical to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace aoa::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;
bool available(Isa isa) noexcept;
/// Best ISA supported by both the build and the running CPU. AOA_SIMD=scalar in
/// the environment pins the scalar path.
Isa best_available() noexcept;
Isa active() noexcept;
/// Switches the dispatch target; returns false (and changes nothing) when the
/// ISA is not available.
bool select(Isa isa) noexcept;

/// out[r] = sum_j weights[j] * columns[j][r] (mod 2^32) for r in [0, rows).
void encode_tuples(std::span<const std::uint32_t* const> columns,
                   std::span<const std::uint32_t> weights, std::size_t rows, std::uint32_t* out);

/// Index of the first count != expected, or counts.size() when all match.
std::size_t first_mismatch(std::span<const std::uint32_t> counts, std::uint32_t expected);

/// Cyclic shift of a column: out[r] = (a[r] + shift) mod n, with a[r] < n and shift < n.
void add_mod(const std::uint32_t* a, std::uint32_t shift, std::uint32_t n, std::size_t rows,
             std::uint32_t* out);

#define AOA_SIMD_KERNEL_DECLS                                                                   \
  void encode_tuples(std::span<const std::uint32_t* const> columns,                             \
                     std::span<const std::uint32_t> weights, std::size_t rows, std::uint32_t* out); \
  std::size_t first_mismatch(std::span<const std::uint32_t> counts, std::uint32_t expected);     \
  void add_mod(const std::uint32_t* a, std::uint32_t shift, std::uint32_t n, std::size_t rows,   \
               std::uint32_t* out);

namespace scalar {
AOA_SIMD_KERNEL_DECLS
}
namespace avx2 {
AOA_SIMD_KERNEL_DECLS
}
namespace neon {
AOA_SIMD_KERNEL_DECLS
}

#undef AOA_SIMD_KERNEL_DECLS

}  // namespace aoa::simd
