// SPDX-License-Identifier: Apache-2.0
#pragma once

// Upper bounds on the number of columns of an OA(t, k, v): the classical
// column bound for all alphabets and, for prime powers, the conjectured
// maximum length of a linear MDS code together with whether that value is
// proved for the given (t, q).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aoa {

enum class BoundRule {
  StrengthTwo,              // t = 2: k <= v + 1
  EvenAlphabet,             // v even, 3 <= t < v: k <= v + t - 1
  OddAlphabet,              // v odd, 3 <= t < v: k <= v + t - 2
  StrengthAtLeastAlphabet,  // t >= v: k <= t + 1
  MdsLength,                // linear codes: k <= M(t, q)
};

enum class BoundStatus { ProvedBound, ConjecturalBound };

struct FeasibilityVerdict {
  std::uint64_t max_k;
  BoundRule rule;
  BoundStatus status;
};

std::string_view rule_name(BoundRule r) noexcept;
std::string_view status_name(BoundStatus s) noexcept;

/// Column bound for OA(t, k, v); t >= 2, v >= 2. When t = v both the even/odd
/// rule and t + 1 apply and the smaller t + 1 is reported.
FeasibilityVerdict column_bound(unsigned t, std::uint64_t v);

/// M(t, q): q + 2 for q = 2^m and t in {3, q-1}, q + 1 otherwise when t < q,
/// t + 1 when t >= q. Proved when q is prime, q <= 27, t <= 5, t >= q - 3,
/// t <= p, or t >= q. NotPrimePower.
FeasibilityVerdict mds_max_len(unsigned t, std::uint64_t q);

struct OaRuling {
  unsigned t;
  std::uint64_t k;
  std::uint64_t v;
  std::optional<FeasibilityVerdict> column;  // absent for t < 2
  bool ruled_out = false;                    // by the column bound
  std::optional<FeasibilityVerdict> linear;  // prime-power v only
  bool linear_ruled_out = false;             // no linear OA, per `linear->status`

  /// "RuledOut: column bound (max k = 7)" and similar.
  std::string describe() const;
};

/// Never claims existence: NotRuledOut only means neither bound applies.
OaRuling oa_feasible(unsigned t, std::uint64_t k, std::uint64_t v);

struct AoaParams {
  unsigned s, t;
  std::uint64_t k, v;
  std::string to_string() const;
};

struct GapRow {
  std::string family;      // e.g. "linear AOA(1,3,q+2,q)"
  std::string conditions;  // the family's admissibility condition
  std::uint64_t value;     // q or v the row is instantiated at
  AoaParams aoa;
  std::string construction;
  bool constructed = false;
  std::string certificate;  // "expanded" or "generator" or the failure text
  OaRuling oa;
  bool ruled_out = false;  // by the bound the family cites
  /// Admissible instances tried before `aoa` that the cited bound does not
  /// rule out.
  std::vector<AoaParams> exceptions;
};

/// Instantiates every table family at each value in `values` (prime powers or,
/// for the two unrestricted families, any v), building and certifying the AOA
/// and ruling on OA(t, k+t-s, v). Families whose conditions fail are skipped;
/// instances beyond the desk guard are skipped.
std::vector<GapRow> gap_table(const std::vector<std::uint64_t>& values);

std::string gap_table_markdown(const std::vector<GapRow>& rows);
std::string gap_table_csv(const std::vector<GapRow>& rows);

}  // namespace aoa
