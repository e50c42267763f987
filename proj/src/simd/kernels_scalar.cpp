// SPDX-License-Identifier: Apache-2.0
#include "aoa/simd/kernels.hpp"

namespace aoa::simd::scalar {

void encode_tuples(std::span<const std::uint32_t* const> columns,
                   std::span<const std::uint32_t> weights, std::size_t rows, std::uint32_t* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint32_t code = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) code += weights[j] * columns[j][r];
    out[r] = code;
  }
}

std::size_t first_mismatch(std::span<const std::uint32_t> counts, std::uint32_t expected) {
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] != expected) return i;
  return counts.size();
}

void add_mod(const std::uint32_t* a, std::uint32_t shift, std::uint32_t n, std::size_t rows,
             std::uint32_t* out) {
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint32_t x = a[r] + shift;
    out[r] = x >= n ? x - n : x;
  }
}

}  // namespace aoa::simd::scalar
