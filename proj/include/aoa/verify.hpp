// SPDX-License-Identifier: Apache-2.0
#pragma once

// Exhaustive checkers for every defining property. Column subsets are visited
// in lexicographic order and a failing verdict reports the first failure.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aoa/design.hpp"
#include "aoa/error.hpp"

namespace aoa {

struct Counterexample {
  std::string property;              // e.g. "strength", "augmented", "difference"
  std::vector<std::size_t> columns;  // offending column subset (augmented column = k)
  std::vector<std::uint32_t> tuple;  // offending tuple / group element, when applicable
  std::uint64_t occurrences = 0;
  std::uint64_t expected = 0;
  std::optional<std::uint64_t> class_id;
  std::string detail;
};

class Verdict {
 public:
  static Verdict pass() { return Verdict{}; }
  static Verdict fail(Counterexample c) {
    Verdict v;
    v.failure_ = std::move(c);
    return v;
  }

  bool ok() const noexcept { return !failure_.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
  const std::optional<Counterexample>& failure() const noexcept { return failure_; }
  std::string describe() const;

 private:
  std::optional<Counterexample> failure_;
};

class VerificationError : public Error {
 public:
  VerificationError(const std::string& context, Verdict verdict)
      : Error(Errc::VerificationFailed, context + ": " + verdict.describe()), verdict_(std::move(verdict)) {}
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

/// Throws VerificationError when the verdict failed.
void require_ok(const Verdict& v, const std::string& context);

/// Every t-subset of columns holds each t-tuple exactly rows/v^t times.
Verdict check_oa(const OrthogonalArray& a, unsigned t);
inline Verdict check_oa(const OrthogonalArray& a) { return check_oa(a, a.t()); }

/// Every class is an OA(s, k, v).
Verdict check_resolution(const OrthogonalArray& a, const ResolutionPartition& p);
inline Verdict check_resolution(const ResolvableOA& r) { return check_resolution(r.array, r.partition); }

/// First k columns have strength t, and every s columns together with the
/// augmented column cover X^s x Y exactly once.
Verdict check_aoa(const AugmentedOA& a);

/// For each column pair, the row-wise differences list every group element once.
Verdict check_dm(const DifferenceMatrix& d);
/// The adder is a permutation and D with columns 3, 4 shifted by it is a DM.
/// Throws AdderMissing when the matrix carries no adder.
Verdict check_adder(const DifferenceMatrix& d);
/// D^s: columns with index >= 2 shifted row-wise by the adder.
DifferenceMatrix shifted_by_adder(const DifferenceMatrix& d);

/// M is t x k; every t columns are linearly independent.
Verdict check_mds_generator(const Matrix& m, unsigned t);
/// Every s columns of the first s rows are linearly independent.
Verdict check_s_rows(const Matrix& m, unsigned s);
/// Same for an explicit row selection.
Verdict check_s_rows(const Matrix& m, std::span<const std::size_t> rows);
/// check_mds_generator on all rows, then check_s_rows on the designated block.
Verdict check_generator(const GeneratorMatrix& g);

/// sigma and u -> u + sigma(u) are both bijections of G.
Verdict check_complete_mapping(const CompleteMapping& sigma);

}  // namespace aoa
