// SPDX-License-Identifier: Apache-2.0
#include <arm_neon.h>

#include "aoa/simd/kernels.hpp"

namespace aoa::simd::neon {

void encode_tuples(std::span<const std::uint32_t* const> columns,
                   std::span<const std::uint32_t> weights, std::size_t rows, std::uint32_t* out) {
  std::size_t r = 0;
  for (; r + 4 <= rows; r += 4) {
    uint32x4_t acc = vdupq_n_u32(0);
    for (std::size_t j = 0; j < columns.size(); ++j)
      acc = vmlaq_n_u32(acc, vld1q_u32(columns[j] + r), weights[j]);
    vst1q_u32(out + r, acc);
  }
  for (; r < rows; ++r) {
    std::uint32_t code = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) code += weights[j] * columns[j][r];
    out[r] = code;
  }
}

std::size_t first_mismatch(std::span<const std::uint32_t> counts, std::uint32_t expected) {
  const uint32x4_t want = vdupq_n_u32(expected);
  std::size_t i = 0;
  for (; i + 4 <= counts.size(); i += 4) {
    const uint32x4_t eq = vceqq_u32(vld1q_u32(counts.data() + i), want);
    if (vminvq_u32(eq) != UINT32_MAX) break;
  }
  for (; i < counts.size(); ++i)
    if (counts[i] != expected) return i;
  return counts.size();
}

void add_mod(const std::uint32_t* a, std::uint32_t shift, std::uint32_t n, std::size_t rows,
             std::uint32_t* out) {
  const uint32x4_t s = vdupq_n_u32(shift);
  const uint32x4_t nv = vdupq_n_u32(n);
  std::size_t r = 0;
  for (; r + 4 <= rows; r += 4) {
    uint32x4_t x = vaddq_u32(vld1q_u32(a + r), s);
    x = vsubq_u32(x, vandq_u32(vcgeq_u32(x, nv), nv));
    vst1q_u32(out + r, x);
  }
  for (; r < rows; ++r) {
    std::uint32_t x = a[r] + shift;
    out[r] = x >= n ? x - n : x;
  }
}

}  // namespace aoa::simd::neon
