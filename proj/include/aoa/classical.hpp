// SPDX-License-Identifier: Apache-2.0
#pragma once

// Set- and group-theoretic constructions and the conversions between AOAs,
// resolvable OAs and plain OAs. Every function verifies its output before
// returning and throws VerificationError otherwise.

#include <cstdint>

#include "aoa/design.hpp"
#include "aoa/verify.hpp"

namespace aoa {

/// Class labels become the augmented column. The inputs are verified first.
AugmentedOA resolvable_to_aoa(const OrthogonalArray& a, const ResolutionPartition& p);
AugmentedOA resolvable_to_aoa(const ResolvableOA& r);
/// Splits rows by augmented symbol.
ResolvableOA aoa_to_resolvable(const AugmentedOA& a);

/// AOA(t-1, t, k, v) -> OA(t, k+1, v). WrongParameters unless s = t-1.
OrthogonalArray aoa_append(const AugmentedOA& a);
/// OA(t, k+1, v) -> AOA(t-1, t, k, v), the last column becoming the label.
AugmentedOA oa_split(const OrthogonalArray& b);
/// OA(t, k+t-s, v) -> AOA(s, t, k, v); the label is the mixed-radix value of
/// the last t-s coordinates.
AugmentedOA oa_to_aoa(const OrthogonalArray& b, unsigned s);

/// OA(t, q+1, q): codewords of the generator with columns (1, a, ..., a^(t-1))
/// for every a, then (0, ..., 0, 1). NotPrimePower, StrengthTooHigh.
OrthogonalArray vandermonde_oa(unsigned t, std::uint32_t q);
/// OA(3, q+2, q) for q = 2^m >= 4: the t = 3 generator plus column (0, 1, 0).
OrthogonalArray vandermonde_oa_ext(std::uint32_t q);
Matrix vandermonde_generator(unsigned t, std::uint32_t q);

/// OA(k-1, k, v): every zero-sum k-tuple over Z_v, the first k-1 coordinates in
/// mixed-radix order.
OrthogonalArray zero_sum_oa(unsigned k, std::uint32_t v);
/// Resolution into v^(k-2) classes of v rows for even k; OddK otherwise.
ResolutionPartition zero_sum_resolution(unsigned k, std::uint32_t v);
AugmentedOA zero_sum_aoa(unsigned k, std::uint32_t v);

/// AOA(s,t,k,u1) x AOA(s,t,k,u2) -> AOA(s,t,k,u1*u2). Symbol (x, y) is
/// x*u2 + y, label (i, j) is i*u2^(t-s) + j. ParameterMismatch.
AugmentedOA product_aoa(const AugmentedOA& a, const AugmentedOA& b);

/// OA(s, t, v) with exactly t columns -> AOA(s, t, t, v) by shifting the first
/// t-s columns by every b in Z_v^(t-s). WrongShape unless a.k() = t.
AugmentedOA shift_aoa(const OrthogonalArray& a, unsigned t);

/// Resolvable OA(3, 5, n) from an (n,4,1)-DM and a complete mapping: rows
/// (d1+u, d2+u, d3+u+e, d4+u+e, e); the class of a row is (i, e - sigma(u)).
ResolvableOA dm_resolvable_oa5(const DifferenceMatrix& d, const CompleteMapping& sigma);
/// Resolvable OA(3, 6, n) from an (n,4,1)-DM with adder s: rows
/// (d1+u, d2+u, d3+u+e+s_i, d4+u+e+s_i, e, e+s_i), classes as above.
ResolvableOA dm_adder_resolvable_oa6(const DifferenceMatrix& d, const CompleteMapping& sigma);

}  // namespace aoa
