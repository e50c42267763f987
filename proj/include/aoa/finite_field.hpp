// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace aoa {

/// Field elements are integer indices in [0, q). The index is the base-p digit
/// vector of the element read as a polynomial in x over GF(p): index 0 is zero,
/// index 1 is one, index p is x.
using Element = std::uint32_t;

struct FieldSpec {
  std::uint32_t p = 2;
  unsigned m = 1;
  /// Monic degree-m modulus over GF(p), low degree first. Empty when m == 1.
  std::vector<std::uint32_t> modulus;

  std::uint32_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

std::string to_string(const FieldSpec& spec);

namespace detail {
struct FieldTables;
}

/// GF(p^m) with table-driven arithmetic. Copies share the tables.
class Field {
 public:
  /// GF(p^m) with the canonical modulus: the first monic irreducible of degree m
  /// when candidates are ordered by the index of their lower coefficients.
  static Field create(std::uint32_t p, unsigned m = 1);
  /// GF(p^m) with an explicit modulus (checked for irreducibility).
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);
  static Field from_spec(const FieldSpec& spec);
  /// GF(q) for a prime power q with the canonical modulus.
  static Field of_order(std::uint64_t q);

  const FieldSpec& spec() const noexcept;
  std::uint32_t p() const noexcept;
  unsigned m() const noexcept;
  std::uint32_t q() const noexcept;

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;

  /// Image of the integer n under Z -> GF(p) -> GF(q).
  Element from_int(std::int64_t n) const noexcept;

  /// The generator the log/exp tables are built on (smallest-index primitive).
  Element primitive() const noexcept;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order_of(Element a) const;

  bool valid(Element a) const noexcept { return a < q(); }
  void check(Element a) const;

  bool operator==(const Field& other) const noexcept;

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> tables) : t_(std::move(tables)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

/// Smallest-index element of multiplicative order q-1 (1 for GF(2)).
Element find_primitive(const Field& field);

/// Smallest-index nonzero alpha with alpha != a + 1/a for every nonzero a, in
/// characteristic 2 with q >= 4. x^2 + alpha x + 1 is then irreducible.
Element special_alpha_char2(const Field& field);

}  // namespace aoa
