// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aoa/finite_field.hpp"

namespace aoa {

struct Cyclic {
  std::uint32_t n;
};

/// Additive group of a finite field.
struct FieldAdditive {
  Field field;
};

using GroupComponent = std::variant<Cyclic, FieldAdditive>;

/// Direct product of cyclic and field-additive groups. Elements are encoded
/// mixed-radix with the first component most significant, so (x, y) in
/// Z_6 x Z_2 is 2x + y.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<GroupComponent> components);
  static GroupSpec cyclic(std::uint32_t n);

  const std::vector<GroupComponent>& components() const noexcept { return comps_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t component_order(std::size_t i) const noexcept { return radix_[i]; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t neg(std::uint32_t x) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }

  std::vector<std::uint32_t> decode(std::uint32_t x) const;
  std::uint32_t encode(const std::vector<std::uint32_t>& parts) const;
  /// All elements in mixed-radix order (0, 1, ..., order-1).
  std::vector<std::uint32_t> enumerate() const;

  void check(std::uint32_t x) const;
  bool operator==(const GroupSpec& other) const;

 private:
  std::vector<GroupComponent> comps_;
  std::vector<std::uint32_t> radix_;
  std::uint32_t order_ = 1;
};

std::string to_string(const GroupSpec& g);
/// Inverse of to_string: "Z6xZ2", "Z3xF8", "Z15". Field components use the
/// canonical modulus. SchemaViolation on malformed text.
GroupSpec parse_group(std::string_view text);

/// Precomputed Cayley tables for hot loops (searches and constructions).
class GroupTable {
 public:
  explicit GroupTable(const GroupSpec& g);
  std::uint32_t order() const noexcept { return n_; }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept { return add_[x * n_ + y]; }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept { return add_[x * n_ + neg_[y]]; }
  std::uint32_t neg(std::uint32_t x) const noexcept { return neg_[x]; }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> neg_;
};

}  // namespace aoa
