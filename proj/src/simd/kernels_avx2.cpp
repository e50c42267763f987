// SPDX-License-Identifier: Apache-2.0
// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "aoa/simd/kernels.hpp"

namespace aoa::simd::avx2 {

void encode_tuples(std::span<const std::uint32_t* const> columns,
                   std::span<const std::uint32_t> weights, std::size_t rows, std::uint32_t* out) {
  std::size_t r = 0;
  for (; r + 8 <= rows; r += 8) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(columns[j] + r));
      const __m256i w = _mm256_set1_epi32(static_cast<int>(weights[j]));
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(x, w));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + r), acc);
  }
  for (; r < rows; ++r) {
    std::uint32_t code = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) code += weights[j] * columns[j][r];
    out[r] = code;
  }
}

std::size_t first_mismatch(std::span<const std::uint32_t> counts, std::uint32_t expected) {
  const __m256i want = _mm256_set1_epi32(static_cast<int>(expected));
  std::size_t i = 0;
  for (; i + 8 <= counts.size(); i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(counts.data() + i));
    const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(x, want)));
    if (eq != 0xFF) return i + static_cast<std::size_t>(__builtin_ctz(~eq & 0xFF));
  }
  for (; i < counts.size(); ++i)
    if (counts[i] != expected) return i;
  return counts.size();
}

void add_mod(const std::uint32_t* a, std::uint32_t shift, std::uint32_t n, std::size_t rows,
             std::uint32_t* out) {
  // Values stay below 2^31 (alphabets are guarded), so signed compares are safe.
  const __m256i s = _mm256_set1_epi32(static_cast<int>(shift));
  const __m256i nm1 = _mm256_set1_epi32(static_cast<int>(n) - 1);
  const __m256i nv = _mm256_set1_epi32(static_cast<int>(n));
  std::size_t r = 0;
  for (; r + 8 <= rows; r += 8) {
    __m256i x = _mm256_add_epi32(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + r)), s);
    const __m256i over = _mm256_cmpgt_epi32(x, nm1);
    x = _mm256_sub_epi32(x, _mm256_and_si256(over, nv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + r), x);
  }
  for (; r < rows; ++r) {
    std::uint32_t x = a[r] + shift;
    out[r] = x >= n ? x - n : x;
  }
}

}  // namespace aoa::simd::avx2
