// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cstdlib>
#include <cstring>

#include "aoa/simd/kernels.hpp"

namespace aoa::simd {

namespace {

struct KernelTable {
  Isa isa;
  decltype(&scalar::encode_tuples) encode_tuples;
  decltype(&scalar::first_mismatch) first_mismatch;
  decltype(&scalar::add_mod) add_mod;
};

constexpr KernelTable kScalar{Isa::Scalar, &scalar::encode_tuples, &scalar::first_mismatch,
                              &scalar::add_mod};
#if defined(AOA_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::encode_tuples, &avx2::first_mismatch, &avx2::add_mod};
#endif
#if defined(AOA_HAVE_NEON_KERNELS)
constexpr KernelTable kNeon{Isa::Neon, &neon::encode_tuples, &neon::first_mismatch, &neon::add_mod};
#endif

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return &kScalar;
    case Isa::Avx2:
#if defined(AOA_HAVE_AVX2_KERNELS)
      if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
      return nullptr;
    case Isa::Neon:
#if defined(AOA_HAVE_NEON_KERNELS)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* initial_table() noexcept {
  if (const char* env = std::getenv("AOA_SIMD"); env && std::strcmp(env, "scalar") == 0)
    return &kScalar;
  return table_for(best_available());
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool available(Isa isa) noexcept { return table_for(isa) != nullptr; }

Isa best_available() noexcept {
  if (available(Isa::Avx2)) return Isa::Avx2;
  if (available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active() noexcept { return current().load()->isa; }

bool select(Isa isa) noexcept {
  const KernelTable* t = table_for(isa);
  if (!t) return false;
  current().store(t);
  return true;
}

void encode_tuples(std::span<const std::uint32_t* const> columns,
                   std::span<const std::uint32_t> weights, std::size_t rows, std::uint32_t* out) {
  current().load()->encode_tuples(columns, weights, rows, out);
}

std::size_t first_mismatch(std::span<const std::uint32_t> counts, std::uint32_t expected) {
  return current().load()->first_mismatch(counts, expected);
}

void add_mod(const std::uint32_t* a, std::uint32_t shift, std::uint32_t n, std::size_t rows,
             std::uint32_t* out) {
  current().load()->add_mod(a, shift, n, rows, out);
}

}  // namespace aoa::simd
