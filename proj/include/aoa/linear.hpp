// SPDX-License-Identifier: Apache-2.0
#pragma once

// Generator-matrix constructions of linear AOAs. A generator is a t x k matrix
// whose first s rows (M1) span an MDS subcode of the MDS code spanned by all
// rows; expanding it yields an AOA(s, t, k, q).

#include <cstdint>
#include <string>
#include <utility>

#include "aoa/design.hpp"
#include "aoa/verify.hpp"

namespace aoa {

/// All codewords x.G, x running over GF(q)^rows in mixed-radix order with the
/// first coordinate most significant.
Table codewords(const Matrix& g);

/// Rows y.M2 + x.M1 for y in GF(q)^(t-s) (outer) and x in GF(q)^s (inner),
/// labelled by the mixed-radix value of y. PropertyOneFailed when some t
/// columns of the stacked matrix are dependent, PropertyTwoFailed when some s
/// columns of M1 are; ParameterViolation unless 1 <= s < t.
AugmentedOA expand(const Matrix& m1, const Matrix& m2);
AugmentedOA expand(const GeneratorMatrix& g);

enum class CertificateLevel { Expanded, GeneratorOnly };

struct LinearCertificate {
  CertificateLevel level;
  Verdict verdict;
};

/// Full expansion plus check_aoa when q^t <= expansion_limit (and within the
/// desk guard); otherwise the column-subset rank sweeps of check_generator.
LinearCertificate certify(const GeneratorMatrix& g, std::uint64_t expansion_limit = 100000);

/// G is an s x t generator of an MDS code (a linear OA(s, t, q)). Returns
/// generators for AOA(s, t, t, q) (M1 = G) and AOA(t-s, t, t, q) (M1 = dual of
/// G); M2 completes M1 with unit rows. NotMds, WrongShape.
std::pair<GeneratorMatrix, GeneratorMatrix> full_length_aoas(const Matrix& g, unsigned t);

/// AOA(s, t, k, q) generator -> AOA(k-t, k-s, k, q) generator. M1' spans the
/// dual of the whole code, M1' + M2' the dual of the subcode.
GeneratorMatrix dual_aoa_generator(const GeneratorMatrix& g);

/// AOA(1, k-1, k, q): a nowhere-zero codeword of the sum-zero code as M1, the
/// rest of the sum-zero code as M2. q > 2, k >= 3.
GeneratorMatrix sum_zero_generator(std::uint32_t q, unsigned k);

/// AOA(s, t, q+1, q) with t - s >= 2: power rows a^j as M2, rows a^j h(a) for
/// an irreducible h of degree t-s as M1, plus one point at infinity.
GeneratorMatrix irreducible_twist_generator(std::uint32_t q, unsigned s, unsigned t);

/// AOA(2, 3, q+1, q) for q = 2^m >= 4: rows 1 and a^2 (with the extra column)
/// as M1, row a as M2.
GeneratorMatrix char2_conic_generator(std::uint32_t q);

/// AOA(1, 3, q+2, q) for q = 2^m >= 4 using h(x) = x^2 + alpha x + 1 with
/// alpha = special_alpha_char2.
GeneratorMatrix char2_hyperoval_generator(std::uint32_t q);

/// AOA(1, q-1, q+2, q) (s = 1) or AOA(3, q-1, q+2, q) (s = 3, q > 4) for
/// q = 2^m >= 4, from combinations of the rows (1, a, a^2, e_a) over nonzero a.
GeneratorMatrix char2_wide_generator(std::uint32_t q, unsigned s);

struct SubcodeReport {
  std::size_t code_rows = 0;
  std::size_t code_dim = 0;
  bool code_mds = false;
  std::size_t subcode_rows = 0;
  std::size_t subcode_dim = 0;
  bool subcode_mds = false;
  Verdict code_verdict;
  Verdict subcode_verdict;

  bool linear_aoa() const noexcept { return code_mds && subcode_mds && subcode_rows < code_rows; }
  std::string describe() const;
};

/// Whether span(M1, M2) is an MDS code of dimension t containing the MDS
/// subcode span(M1) of dimension s.
SubcodeReport mds_subcode_report(const Matrix& m1, const Matrix& m2);

}  // namespace aoa
