// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aoa/finite_field.hpp"

namespace aoa {

/// Polynomial over a field, low degree first, with no trailing zeros (the zero
/// polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Element> coeffs);

  const std::vector<Element>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Element coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Element leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Element> c_;
};

Polynomial poly_add(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Field& f, const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Field& f, const Polynomial& a, const Polynomial& b);
/// (quotient, remainder); throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> poly_divmod(const Field& f, const Polynomial& a,
                                              const Polynomial& b);
Element poly_eval(const Field& f, const Polynomial& a, Element x);

/// The monic polynomial of degree d whose lower coefficients are the base-q
/// digits of `rank` (c_0 least significant).
Polynomial monic_from_rank(const Field& f, unsigned d, std::uint64_t rank);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Field& f, const Polynomial& a);

/// First monic irreducible of degree d in rank order (see monic_from_rank).
Polynomial find_irreducible(const Field& f, unsigned d);

std::string to_string(const Polynomial& a);

}  // namespace aoa
