// SPDX-License-Identifier: Apache-2.0
#pragma once

// (n,4,1) difference matrices, adders and complete mappings: closed forms where
// they exist, budgeted backtracking otherwise, and a small verified catalog.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "aoa/design.hpp"

namespace aoa {

/// d(i, j) = i * j mod n for j in {0, 1, 2, 3}. BadModulus unless gcd(n, 6) = 1
/// and n >= 5.
DifferenceMatrix dm_multiplicative(std::uint32_t n);

struct SearchBudget {
  std::uint64_t nodes = 0;                  // 0 means unlimited
  std::chrono::milliseconds time{0};        // 0 means unlimited
  std::optional<std::uint64_t> seed;        // shuffles value order when set
};

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct DmSearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<DifferenceMatrix> dm;
  std::uint64_t nodes = 0;
};

/// Backtracking for an (n,4,1)-DM over `group`, with column 0 and row 0 zero and
/// column 1 equal to the element index. Rows are filled in order and values
/// tried in element order unless a seed is given. With `with_adder` the matrix
/// and its adder are found together: for each orthomorphism x (column 2) the
/// search lists the orthomorphisms x' with x' - x bijective and pairs them up,
/// taking y among those mates and s = x' - x. Groups of order at most 64.
DmSearchResult dm_search(const GroupSpec& group, SearchBudget budget, bool with_adder = false);

/// Abelian groups of order n as products of cyclic groups in invariant-factor
/// form, largest factor first, starting with Z_n.
std::vector<GroupSpec> abelian_groups(std::uint32_t n);

/// dm_search over abelian_groups(n) in turn under one shared budget. Z_9, for
/// instance, has no (9,4,1)-DM, so n = 9 ends on Z_3 x Z_3.
DmSearchResult dm_search_order(std::uint32_t n, SearchBudget budget, bool with_adder = false);

struct AdderSearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<std::vector<std::uint32_t>> adder;
  std::uint64_t nodes = 0;
};

/// An adder for a fixed DM: s is a permutation and the four difference lists
/// touching columns 2 and 3 stay permutations after the shift.
/// VerificationFailed when d is not a DM.
AdderSearchResult adder_search(const DifferenceMatrix& d, SearchBudget budget);

/// Identity on odd-order groups, the piecewise map on Z_6 x Z_2, (x, alpha y)
/// on Z_3 x GF(8) with alpha^3 + alpha + 1 = 0, otherwise a bounded search.
/// NoCompleteMappingKnown when none is found.
CompleteMapping sigma_for(const GroupSpec& group);

/// Pre-searched DM-with-adder records for n in catalog_orders(), re-verified on
/// every load. NotInCatalog otherwise.
DifferenceMatrix catalog(std::uint32_t n);
std::vector<std::uint32_t> catalog_orders();

std::string_view status_name(SearchStatus s) noexcept;

}  // namespace aoa
