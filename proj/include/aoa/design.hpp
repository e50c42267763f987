// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aoa/group.hpp"
#include "aoa/matrix.hpp"

namespace aoa {

using Symbol = std::uint32_t;

/// Dense row-major table of symbols.
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Table(std::size_t rows, std::size_t cols, std::vector<Symbol> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Symbol& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Symbol>& data() const noexcept { return data_; }

  bool operator==(const Table&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

/// Upper bound on stored row counts (v^t). Defaults to 2^24; the environment
/// variable AOA_DESK_GUARD overrides it.
std::uint64_t desk_guard();
void set_desk_guard(std::uint64_t limit);
/// v^t, or DeskGuardExceeded when it passes the guard.
std::uint64_t guarded_power(std::uint64_t v, unsigned t);

/// OA(t, k, v): v^t rows, k columns, every t columns hold each t-tuple once.
/// Construction checks shape and ranges only; see verify.hpp for strength.
class OrthogonalArray {
 public:
  OrthogonalArray(std::uint32_t v, unsigned t, Table rows);

  std::uint32_t v() const noexcept { return v_; }
  unsigned t() const noexcept { return t_; }
  std::size_t k() const noexcept { return rows_.cols(); }
  std::size_t num_rows() const noexcept { return rows_.rows(); }
  const Table& rows() const noexcept { return rows_; }
  Symbol at(std::size_t r, std::size_t c) const { return rows_.at(r, c); }

  bool operator==(const OrthogonalArray&) const = default;

 private:
  std::uint32_t v_;
  unsigned t_;
  Table rows_;
};

/// Assignment of the v^t rows of an OA(t,k,v) to v^(t-s) classes of v^s rows.
class ResolutionPartition {
 public:
  ResolutionPartition(std::uint32_t v, unsigned t, unsigned s, std::vector<std::uint32_t> class_of);

  unsigned s() const noexcept { return s_; }
  std::uint64_t num_classes() const noexcept { return classes_; }
  const std::vector<std::uint32_t>& class_of() const noexcept { return class_of_; }

  bool operator==(const ResolutionPartition&) const = default;

 private:
  unsigned s_;
  std::uint64_t classes_;
  std::vector<std::uint32_t> class_of_;
};

struct ResolvableOA {
  OrthogonalArray array;
  ResolutionPartition partition;

  bool operator==(const ResolvableOA&) const = default;
};

/// AOA(s, t, k, v): v^t rows of k symbols in [0, v) followed by one augmented
/// symbol in [0, v^(t-s)).
class AugmentedOA {
 public:
  AugmentedOA(std::uint32_t v, unsigned t, unsigned s, Table rows);

  std::uint32_t v() const noexcept { return v_; }
  unsigned t() const noexcept { return t_; }
  unsigned s() const noexcept { return s_; }
  std::size_t k() const noexcept { return rows_.cols() - 1; }
  std::uint64_t aug_levels() const noexcept { return aug_levels_; }
  std::size_t num_rows() const noexcept { return rows_.rows(); }
  const Table& rows() const noexcept { return rows_; }
  Symbol at(std::size_t r, std::size_t c) const { return rows_.at(r, c); }
  Symbol aug(std::size_t r) const { return rows_.at(r, k()); }

  bool operator==(const AugmentedOA&) const = default;

 private:
  std::uint32_t v_;
  unsigned t_;
  unsigned s_;
  std::uint64_t aug_levels_;
  Table rows_;
};

/// (n, k, 1) difference matrix over an abelian group, optionally with an adder.
class DifferenceMatrix {
 public:
  DifferenceMatrix(GroupSpec group, Table entries,
                   std::optional<std::vector<std::uint32_t>> adder = std::nullopt);

  const GroupSpec& group() const noexcept { return group_; }
  std::uint32_t n() const noexcept { return group_.order(); }
  std::size_t k() const noexcept { return entries_.cols(); }
  const Table& entries() const noexcept { return entries_; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
  const std::optional<std::vector<std::uint32_t>>& adder() const noexcept { return adder_; }
  DifferenceMatrix with_adder(std::vector<std::uint32_t> adder) const;

  bool operator==(const DifferenceMatrix&) const = default;

 private:
  GroupSpec group_;
  Table entries_;
  std::optional<std::vector<std::uint32_t>> adder_;
};

/// t x k generator over GF(q). When s_split is set, the first s_split rows are
/// the designated s-row block M1 and the remaining rows form M2.
class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(Matrix entries, std::optional<unsigned> s_split = std::nullopt);
  GeneratorMatrix(const Matrix& m1, const Matrix& m2);

  const Field& field() const noexcept { return entries_.field(); }
  std::size_t t() const noexcept { return entries_.rows(); }
  std::size_t k() const noexcept { return entries_.cols(); }
  const Matrix& entries() const noexcept { return entries_; }
  const std::optional<unsigned>& s_split() const noexcept { return s_split_; }
  unsigned s() const;
  Matrix m1() const;
  Matrix m2() const;

  bool operator==(const GeneratorMatrix&) const = default;

 private:
  Matrix entries_;
  std::optional<unsigned> s_split_;
};

/// A table sigma over G. The complete-mapping property (sigma and u+sigma(u)
/// both bijective) is certified by check_complete_mapping, not here.
class CompleteMapping {
 public:
  CompleteMapping(GroupSpec group, std::vector<std::uint32_t> table);

  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }
  std::uint32_t operator()(std::uint32_t u) const { return table_[u]; }

  bool operator==(const CompleteMapping&) const = default;

 private:
  GroupSpec group_;
  std::vector<std::uint32_t> table_;
};

OrthogonalArray first_columns(const AugmentedOA& a);

/// Drops the listed columns (the augmented column is never deletable).
OrthogonalArray delete_columns(const OrthogonalArray& a, std::span<const std::size_t> cols);
AugmentedOA delete_columns(const AugmentedOA& a, std::span<const std::size_t> cols);
ResolvableOA delete_columns(const ResolvableOA& a, std::span<const std::size_t> cols);
/// Keeps the first `k` (non-augmented) columns.
AugmentedOA truncate(const AugmentedOA& a, std::size_t k);

/// Rows sorted lexicographically; class labels renumbered by first occurrence.
OrthogonalArray canonical_sort(const OrthogonalArray& a);
AugmentedOA canonical_sort(const AugmentedOA& a);
ResolvableOA canonical_sort(const ResolvableOA& a);

}  // namespace aoa
