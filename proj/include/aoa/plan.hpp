// SPDX-License-Identifier: Apache-2.0
#pragma once

// Chooses a tree of constructions for AOA(s, t, k, v) out of the direct
// leaves (linear generators, zero-sum, power-column OAs, shifts, DM-based
// arrays) combined through products and column truncation, then executes it.

#include <cstdint>
#include <string>
#include <vector>

#include "aoa/design.hpp"
#include "aoa/io.hpp"

namespace aoa {

struct PlanNode {
  std::string step;  // leaf kind, "product" or "truncate"
  Json params;
  std::vector<PlanNode> children;

  unsigned s = 0, t = 0;
  std::uint64_t k = 0, v = 0;  // parameters this node produces

  int tier = 0;               // 0 direct, 1 difference-matrix based, 2 product
  unsigned steps = 0;         // nodes in the subtree
  std::uint64_t rows = 0;     // rows materialised by the subtree

  Json to_json() const;
  /// Indented one-line-per-node rendering.
  std::string describe() const;
};

/// Best plan under the order (tier, steps, rows). NoKnownConstruction when no
/// combination of the known leaves applies; that is not a nonexistence claim.
PlanNode plan(unsigned s, unsigned t, std::uint64_t k, std::uint64_t v);

/// Runs the plan; every intermediate array is verified.
AugmentedOA execute(const PlanNode& node);

}  // namespace aoa
