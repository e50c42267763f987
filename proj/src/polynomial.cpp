// SPDX-License-Identifier: Apache-2.0
#include "aoa/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "aoa/error.hpp"
#include "aoa/numeric.hpp"

namespace aoa {

Polynomial::Polynomial(std::vector<Element> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial poly_add(const Field& f, const Polynomial& a, const Polynomial& b) {
  std::vector<Element> r(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(r));
}

Polynomial poly_sub(const Field& f, const Polynomial& a, const Polynomial& b) {
  std::vector<Element> r(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(r));
}

Polynomial poly_mul(const Field& f, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Element> r(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Field& f, const Polynomial& a,
                                              const Polynomial& b) {
  require(!b.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Element> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Element> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Element lead_inv = f.inv(b.leading());
  for (int d = a.degree(); d >= db; --d) {
    Element c = rem[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Element factor = f.mul(c, lead_inv);
    quo[static_cast<std::size_t>(d - db)] = factor;
    for (int i = 0; i <= db; ++i) {
      auto& slot = rem[static_cast<std::size_t>(d - db + i)];
      slot = f.sub(slot, f.mul(factor, b.coeffs()[static_cast<std::size_t>(i)]));
    }
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Element poly_eval(const Field& f, const Polynomial& a, Element x) {
  Element r = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) r = f.add(f.mul(r, x), a.coeffs()[i]);
  return r;
}

Polynomial monic_from_rank(const Field& f, unsigned d, std::uint64_t rank) {
  std::vector<Element> c(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    c[i] = static_cast<Element>(rank % f.q());
    rank /= f.q();
  }
  c[d] = 1;
  return Polynomial(std::move(c));
}

bool is_irreducible(const Field& f, const Polynomial& a) {
  const int d = a.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  // Degree 2 and 3 reduce to root-freeness; keep the root scan as a fast path.
  for (Element x = 0; x < f.q(); ++x)
    if (poly_eval(f, a, x) == 0) return false;
  if (d <= 3) return true;
  for (unsigned e = 2; e <= static_cast<unsigned>(d) / 2; ++e) {
    auto count = checked_pow(f.q(), e);
    require(count.has_value(), Errc::ParameterViolation, "trial division space too large");
    for (std::uint64_t r = 0; r < *count; ++r) {
      auto [quo, rem] = poly_divmod(f, a, monic_from_rank(f, e, r));
      if (rem.is_zero()) return false;
    }
  }
  return true;
}

Polynomial find_irreducible(const Field& f, unsigned d) {
  require(d >= 1, Errc::DegreeZero, "irreducible degree must be >= 1");
  auto count = checked_pow(f.q(), d);
  require(count.has_value(), Errc::ParameterViolation, "candidate space too large");
  for (std::uint64_t r = 0; r < *count; ++r) {
    auto h = monic_from_rank(f, d, r);
    if (is_irreducible(f, h)) return h;
  }
  fail(Errc::NoSuchElement, "no irreducible polynomial found");
}

std::string to_string(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    Element c = a.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace aoa
