// SPDX-License-Identifier: Apache-2.0
#include "aoa/design.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string>

#include "aoa/error.hpp"
#include "aoa/numeric.hpp"

namespace aoa {

namespace {

std::uint64_t initial_guard() {
  if (const char* env = std::getenv("AOA_DESK_GUARD")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 24;
}

std::atomic<std::uint64_t>& guard_slot() {
  static std::atomic<std::uint64_t> slot{initial_guard()};
  return slot;
}

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

Table::Table(std::size_t rows, std::size_t cols, std::vector<Symbol> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows_ * cols_, Errc::InvariantViolation, "table data does not match " + shape(rows, cols));
}

std::uint64_t desk_guard() { return guard_slot().load(); }
void set_desk_guard(std::uint64_t limit) { guard_slot().store(limit); }

std::uint64_t guarded_power(std::uint64_t v, unsigned t) {
  auto n = checked_pow(v, t, desk_guard());
  require(n.has_value(), Errc::DeskGuardExceeded,
          std::to_string(v) + "^" + std::to_string(t) + " rows exceeds the desk guard of " +
              std::to_string(desk_guard()));
  return *n;
}

OrthogonalArray::OrthogonalArray(std::uint32_t v, unsigned t, Table rows)
    : v_(v), t_(t), rows_(std::move(rows)) {
  require(v_ >= 2, Errc::InvariantViolation, "alphabet size must be >= 2");
  require(t_ >= 1 && rows_.cols() >= t_, Errc::InvariantViolation, "need k >= t >= 1");
  require(rows_.rows() == guarded_power(v_, t_), Errc::InvariantViolation,
          "OA(" + std::to_string(t_) + ",k," + std::to_string(v_) + ") needs " +
              std::to_string(ipow(v_, t_)) + " rows, got " + std::to_string(rows_.rows()));
  for (auto x : rows_.data())
    require(x < v_, Errc::InvariantViolation, "symbol " + std::to_string(x) + " outside alphabet");
}

ResolutionPartition::ResolutionPartition(std::uint32_t v, unsigned t, unsigned s,
                                         std::vector<std::uint32_t> class_of)
    : s_(s), class_of_(std::move(class_of)) {
  require(s_ >= 1 && s_ <= t, Errc::InvariantViolation, "need 1 <= s <= t");
  const auto rows = guarded_power(v, t);
  classes_ = ipow(v, t - s_);
  const auto per_class = ipow(v, s_);
  require(class_of_.size() == rows, Errc::InvariantViolation,
          "partition covers " + std::to_string(class_of_.size()) + " rows, expected " + std::to_string(rows));
  std::vector<std::uint64_t> sizes(classes_, 0);
  for (auto c : class_of_) {
    require(c < classes_, Errc::InvariantViolation, "class label " + std::to_string(c) + " out of range");
    ++sizes[c];
  }
  for (std::uint64_t c = 0; c < classes_; ++c)
    require(sizes[c] == per_class, Errc::InvariantViolation,
            "class " + std::to_string(c) + " has " + std::to_string(sizes[c]) + " rows, expected " +
                std::to_string(per_class));
}

AugmentedOA::AugmentedOA(std::uint32_t v, unsigned t, unsigned s, Table rows)
    : v_(v), t_(t), s_(s), rows_(std::move(rows)) {
  require(v_ >= 2, Errc::InvariantViolation, "alphabet size must be >= 2");
  require(rows_.cols() >= 2, Errc::InvariantViolation, "AOA needs at least one column plus the augmented column");
  require(s_ >= 1 && s_ < t_ && t_ <= k(), Errc::InvariantViolation, "need 1 <= s < t <= k");
  require(rows_.rows() == guarded_power(v_, t_), Errc::InvariantViolation,
          "AOA needs " + std::to_string(ipow(v_, t_)) + " rows, got " + std::to_string(rows_.rows()));
  aug_levels_ = ipow(v_, t_ - s_);
  for (std::size_t r = 0; r < rows_.rows(); ++r) {
    for (std::size_t c = 0; c < k(); ++c)
      require(rows_.at(r, c) < v_, Errc::InvariantViolation, "symbol outside alphabet");
    require(rows_.at(r, k()) < aug_levels_, Errc::InvariantViolation, "augmented symbol out of range");
  }
}

DifferenceMatrix::DifferenceMatrix(GroupSpec group, Table entries,
                                   std::optional<std::vector<std::uint32_t>> adder)
    : group_(std::move(group)), entries_(std::move(entries)), adder_(std::move(adder)) {
  require(entries_.rows() == group_.order(), Errc::InvariantViolation,
          "difference matrix needs one row per group element");
  require(entries_.cols() >= 2, Errc::InvariantViolation, "difference matrix needs k >= 2");
  for (auto x : entries_.data()) group_.check(x);
  if (adder_) {
    require(adder_->size() == group_.order(), Errc::InvariantViolation, "adder length must be n");
    std::vector<bool> seen(group_.order(), false);
    for (auto x : *adder_) {
      group_.check(x);
      require(!seen[x], Errc::InvariantViolation, "adder is not a permutation of the group");
      seen[x] = true;
    }
  }
}

DifferenceMatrix DifferenceMatrix::with_adder(std::vector<std::uint32_t> adder) const {
  return DifferenceMatrix(group_, entries_, std::move(adder));
}

GeneratorMatrix::GeneratorMatrix(Matrix entries, std::optional<unsigned> s_split)
    : entries_(std::move(entries)), s_split_(s_split) {
  require(entries_.rows() >= 1 && entries_.rows() <= entries_.cols(), Errc::InvariantViolation,
          "generator needs 1 <= t <= k");
  if (s_split_)
    require(*s_split_ <= entries_.rows(), Errc::InvariantViolation, "s_split exceeds t");
}

GeneratorMatrix::GeneratorMatrix(const Matrix& m1, const Matrix& m2)
    : GeneratorMatrix(stack(m1, m2), static_cast<unsigned>(m1.rows())) {}

unsigned GeneratorMatrix::s() const {
  require(s_split_.has_value(), Errc::InvariantViolation, "generator has no designated s rows");
  return *s_split_;
}

Matrix GeneratorMatrix::m1() const {
  std::vector<std::size_t> rows(s());
  std::iota(rows.begin(), rows.end(), 0);
  return select_rows(entries_, rows);
}

Matrix GeneratorMatrix::m2() const {
  std::vector<std::size_t> rows(t() - s());
  std::iota(rows.begin(), rows.end(), s());
  return select_rows(entries_, rows);
}

CompleteMapping::CompleteMapping(GroupSpec group, std::vector<std::uint32_t> table)
    : group_(std::move(group)), table_(std::move(table)) {
  require(table_.size() == group_.order(), Errc::InvariantViolation, "mapping length must equal |G|");
  for (auto x : table_) group_.check(x);
}

OrthogonalArray first_columns(const AugmentedOA& a) {
  Table t(a.num_rows(), a.k());
  for (std::size_t r = 0; r < a.num_rows(); ++r)
    for (std::size_t c = 0; c < a.k(); ++c) t.at(r, c) = a.at(r, c);
  return OrthogonalArray(a.v(), a.t(), std::move(t));
}

namespace {

std::vector<std::size_t> kept_columns(std::size_t k, std::span<const std::size_t> drop) {
  std::vector<bool> gone(k, false);
  for (auto c : drop) {
    require(c < k, Errc::TooFewColumns, "column " + std::to_string(c) + " does not exist");
    gone[c] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < k; ++c)
    if (!gone[c]) keep.push_back(c);
  return keep;
}

Table project(const Table& t, const std::vector<std::size_t>& keep) {
  Table out(t.rows(), keep.size());
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t j = 0; j < keep.size(); ++j) out.at(r, j) = t.at(r, keep[j]);
  return out;
}

// Sort row indices by the row contents, then by `labels` when given.
std::vector<std::size_t> sorted_order(const Table& t, std::size_t width,
                                      const std::vector<std::uint32_t>* labels) {
  std::vector<std::size_t> order(t.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto ra = t.row(a).first(width), rb = t.row(b).first(width);
    int cmp = 0;
    for (std::size_t i = 0; i < width && cmp == 0; ++i)
      cmp = ra[i] < rb[i] ? -1 : (ra[i] > rb[i] ? 1 : 0);
    if (cmp != 0) return cmp < 0;
    return labels ? (*labels)[a] < (*labels)[b] : false;
  });
  return order;
}

// Re-sorts rows by content and renumbers labels in first-occurrence order.
std::pair<Table, std::vector<std::uint32_t>> canonicalize(const Table& t, std::size_t width,
                                                          std::vector<std::uint32_t> labels) {
  auto order = sorted_order(t, width, &labels);
  std::vector<std::uint32_t> remap(*std::max_element(labels.begin(), labels.end()) + 1, UINT32_MAX);
  std::uint32_t next = 0;
  for (auto r : order)
    if (remap[labels[r]] == UINT32_MAX) remap[labels[r]] = next++;
  for (auto& l : labels) l = remap[l];
  order = sorted_order(t, width, &labels);
  Table out(t.rows(), t.cols());
  std::vector<std::uint32_t> new_labels(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto src = t.row(order[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
    new_labels[i] = labels[order[i]];
  }
  return {std::move(out), std::move(new_labels)};
}

}  // namespace

OrthogonalArray delete_columns(const OrthogonalArray& a, std::span<const std::size_t> cols) {
  auto keep = kept_columns(a.k(), cols);
  require(keep.size() >= a.t(), Errc::TooFewColumns,
          "deleting leaves " + std::to_string(keep.size()) + " columns, strength is " + std::to_string(a.t()));
  return OrthogonalArray(a.v(), a.t(), project(a.rows(), keep));
}

AugmentedOA delete_columns(const AugmentedOA& a, std::span<const std::size_t> cols) {
  for (auto c : cols) require(c < a.k(), Errc::TooFewColumns, "the augmented column cannot be deleted");
  auto keep = kept_columns(a.k(), cols);
  require(keep.size() >= a.t(), Errc::TooFewColumns,
          "deleting leaves " + std::to_string(keep.size()) + " columns, strength is " + std::to_string(a.t()));
  keep.push_back(a.k());
  return AugmentedOA(a.v(), a.t(), a.s(), project(a.rows(), keep));
}

ResolvableOA delete_columns(const ResolvableOA& a, std::span<const std::size_t> cols) {
  return ResolvableOA{delete_columns(a.array, cols), a.partition};
}

AugmentedOA truncate(const AugmentedOA& a, std::size_t k) {
  require(k <= a.k(), Errc::TooFewColumns, "cannot truncate to more columns");
  std::vector<std::size_t> drop;
  for (std::size_t c = k; c < a.k(); ++c) drop.push_back(c);
  return delete_columns(a, drop);
}

OrthogonalArray canonical_sort(const OrthogonalArray& a) {
  auto order = sorted_order(a.rows(), a.k(), nullptr);
  Table out(a.num_rows(), a.k());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto src = a.rows().row(order[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return OrthogonalArray(a.v(), a.t(), std::move(out));
}

AugmentedOA canonical_sort(const AugmentedOA& a) {
  std::vector<std::uint32_t> labels(a.num_rows());
  for (std::size_t r = 0; r < a.num_rows(); ++r) labels[r] = a.aug(r);
  auto [table, relabeled] = canonicalize(a.rows(), a.k(), std::move(labels));
  for (std::size_t r = 0; r < table.rows(); ++r) table.at(r, a.k()) = relabeled[r];
  return AugmentedOA(a.v(), a.t(), a.s(), std::move(table));
}

ResolvableOA canonical_sort(const ResolvableOA& a) {
  auto [table, labels] = canonicalize(a.array.rows(), a.array.k(), a.partition.class_of());
  OrthogonalArray oa(a.array.v(), a.array.t(), std::move(table));
  ResolutionPartition p(oa.v(), oa.t(), a.partition.s(), std::move(labels));
  return ResolvableOA{std::move(oa), std::move(p)};
}

}  // namespace aoa
