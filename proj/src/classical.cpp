// SPDX-License-Identifier: Apache-2.0
#include "aoa/classical.hpp"

#include "aoa/linear.hpp"
#include "aoa/numeric.hpp"

namespace aoa {

namespace {

ResolvableOA checked(ResolvableOA r, const std::string& what) {
  require_ok(check_oa(r.array), what + " strength");
  require_ok(check_resolution(r), what + " resolution");
  return r;
}

AugmentedOA checked(AugmentedOA a, const std::string& what) {
  require_ok(check_aoa(a), what);
  return a;
}

OrthogonalArray checked(OrthogonalArray a, const std::string& what) {
  require_ok(check_oa(a), what);
  return a;
}

}  // namespace

AugmentedOA resolvable_to_aoa(const OrthogonalArray& a, const ResolutionPartition& p) {
  require_ok(check_oa(a), "input array");
  require_ok(check_resolution(a, p), "input partition");
  require(p.s() < a.t(), Errc::WrongParameters, "an AOA needs s < t");
  Table rows(a.num_rows(), a.k() + 1);
  for (std::size_t r = 0; r < a.num_rows(); ++r) {
    for (std::size_t c = 0; c < a.k(); ++c) rows.at(r, c) = a.at(r, c);
    rows.at(r, a.k()) = p.class_of()[r];
  }
  return checked(AugmentedOA(a.v(), a.t(), p.s(), std::move(rows)), "AOA from resolution");
}

AugmentedOA resolvable_to_aoa(const ResolvableOA& r) { return resolvable_to_aoa(r.array, r.partition); }

ResolvableOA aoa_to_resolvable(const AugmentedOA& a) {
  require_ok(check_aoa(a), "input AOA");
  std::vector<std::uint32_t> labels(a.num_rows());
  for (std::size_t r = 0; r < a.num_rows(); ++r) labels[r] = a.aug(r);
  ResolvableOA out{first_columns(a), ResolutionPartition(a.v(), a.t(), a.s(), std::move(labels))};
  return checked(std::move(out), "resolvable OA from AOA");
}

OrthogonalArray aoa_append(const AugmentedOA& a) {
  require(a.s() + 1 == a.t(), Errc::WrongParameters,
          "appending the label needs s = t - 1, got s = " + std::to_string(a.s()) + ", t = " + std::to_string(a.t()));
  require_ok(check_aoa(a), "input AOA");
  return checked(OrthogonalArray(a.v(), a.t(), a.rows()), "appended OA");
}

AugmentedOA oa_split(const OrthogonalArray& b) {
  require(b.t() >= 2, Errc::WrongParameters, "splitting needs t >= 2");
  require(b.k() >= b.t() + 1, Errc::TooFewColumns, "splitting needs k + 1 >= t + 1 columns");
  require_ok(check_oa(b), "input OA");
  return checked(AugmentedOA(b.v(), b.t(), b.t() - 1, b.rows()), "split AOA");
}

AugmentedOA oa_to_aoa(const OrthogonalArray& b, unsigned s) {
  const unsigned t = b.t();
  require(s >= 1 && s < t, Errc::WrongParameters, "needs 1 <= s < t");
  require(b.k() >= std::size_t{t} + (t - s), Errc::TooFewColumns,
          "needs at least t + (t - s) columns to keep k >= t");
  require_ok(check_oa(b), "input OA");
  const std::size_t k = b.k() - (t - s);
  Table rows(b.num_rows(), k + 1);
  for (std::size_t r = 0; r < b.num_rows(); ++r) {
    for (std::size_t c = 0; c < k; ++c) rows.at(r, c) = b.at(r, c);
    std::uint32_t label = 0;
    for (std::size_t c = k; c < b.k(); ++c) label = label * b.v() + b.at(r, c);
    rows.at(r, k) = label;
  }
  return checked(AugmentedOA(b.v(), t, s, std::move(rows)), "AOA from OA");
}

Matrix vandermonde_generator(unsigned t, std::uint32_t q) {
  Field f = Field::of_order(q);
  require(t >= 1, Errc::WrongParameters, "strength must be >= 1");
  require(t <= q, Errc::StrengthTooHigh, "strength " + std::to_string(t) + " exceeds q = " + std::to_string(q));
  Matrix g(f, t, std::size_t{q} + 1);
  for (Element a = 0; a < q; ++a)
    for (unsigned j = 0; j < t; ++j) g.set(j, a, f.pow(a, j));
  g.set(t - 1, q, 1);
  return g;
}

OrthogonalArray vandermonde_oa(unsigned t, std::uint32_t q) {
  return checked(OrthogonalArray(q, t, codewords(vandermonde_generator(t, q))), "power-column OA");
}

OrthogonalArray vandermonde_oa_ext(std::uint32_t q) {
  Field f = Field::of_order(q);
  require(f.p() == 2 && q >= 4, Errc::BadCharacteristic, "needs q = 2^m >= 4");
  Matrix base = vandermonde_generator(3, q);
  Matrix g(f, 3, std::size_t{q} + 2);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c <= q; ++c) g.set(r, c, base.at(r, c));
  g.set(1, std::size_t{q} + 1, 1);
  return checked(OrthogonalArray(q, 3, codewords(g)), "extended power-column OA");
}

OrthogonalArray zero_sum_oa(unsigned k, std::uint32_t v) {
  require(k >= 3, Errc::WrongParameters, "zero-sum arrays need k >= 3");
  require(v >= 2, Errc::WrongParameters, "alphabet size must be >= 2");
  const auto n = guarded_power(v, k - 1);
  Table rows(n, k);
  std::vector<std::uint32_t> x(k - 1, 0);
  for (std::uint64_t r = 0; r < n; ++r) {
    std::uint64_t sum = 0;
    for (unsigned c = 0; c + 1 < k; ++c) {
      rows.at(r, c) = x[c];
      sum += x[c];
    }
    rows.at(r, k - 1) = static_cast<Symbol>((v - sum % v) % v);
    for (std::size_t j = k - 1; j-- > 0;) {
      if (++x[j] < v) break;
      x[j] = 0;
    }
  }
  return checked(OrthogonalArray(v, k - 1, std::move(rows)), "zero-sum OA");
}

ResolutionPartition zero_sum_resolution(unsigned k, std::uint32_t v) {
  require(k % 2 == 0, Errc::OddK, "the zero-sum resolution needs even k, got " + std::to_string(k));
  require(k >= 4, Errc::WrongParameters, "the zero-sum resolution needs k >= 4");
  const auto n = guarded_power(v, k - 1);
  std::vector<std::uint32_t> labels(n);
  // Row index digits are (x_1, ..., x_{k-1}); b = x_{k-1} and the class is
  // (a_1, ..., a_{k-2}) with x_i = a_i + b for odd i and a_i - b for even i.
  std::vector<std::uint32_t> x(k - 1, 0);
  for (std::uint64_t r = 0; r < n; ++r) {
    const std::uint32_t b = x[k - 2];
    std::uint32_t label = 0;
    for (unsigned i = 0; i + 2 < k; ++i) {
      const std::uint32_t a = (i % 2 == 0) ? (x[i] + v - b) % v : (x[i] + b) % v;
      label = label * v + a;
    }
    labels[r] = label;
    for (std::size_t j = k - 1; j-- > 0;) {
      if (++x[j] < v) break;
      x[j] = 0;
    }
  }
  ResolutionPartition p(v, k - 1, 1, std::move(labels));
  return p;
}

AugmentedOA zero_sum_aoa(unsigned k, std::uint32_t v) {
  auto p = zero_sum_resolution(k, v);
  return resolvable_to_aoa(zero_sum_oa(k, v), p);
}

AugmentedOA product_aoa(const AugmentedOA& a, const AugmentedOA& b) {
  require(a.s() == b.s() && a.t() == b.t() && a.k() == b.k(), Errc::ParameterMismatch,
          "product factors must share s, t and k");
  const std::uint64_t v = std::uint64_t{a.v()} * b.v();
  require(v <= UINT32_MAX, Errc::ParameterMismatch, "product alphabet too large");
  const auto n = guarded_power(v, a.t());
  const std::size_t k = a.k();
  const std::uint64_t lb = b.aug_levels();
  Table rows(n, k + 1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.num_rows(); ++i) {
    for (std::size_t j = 0; j < b.num_rows(); ++j, ++r) {
      for (std::size_t c = 0; c < k; ++c) rows.at(r, c) = a.at(i, c) * b.v() + b.at(j, c);
      rows.at(r, k) = static_cast<Symbol>(a.aug(i) * lb + b.aug(j));
    }
  }
  return checked(AugmentedOA(static_cast<std::uint32_t>(v), a.t(), a.s(), std::move(rows)), "product AOA");
}

AugmentedOA shift_aoa(const OrthogonalArray& a, unsigned t) {
  require(a.k() == t, Errc::WrongShape,
          "shifting needs exactly t = " + std::to_string(t) + " columns, got " + std::to_string(a.k()));
  const unsigned s = a.t();
  require(s < t, Errc::WrongParameters, "shifting needs strength s < t");
  require_ok(check_oa(a), "input OA");
  const std::uint32_t v = a.v();
  const unsigned w = t - s;
  const auto n = guarded_power(v, t);
  Table rows(n, std::size_t{t} + 1);
  std::vector<std::uint32_t> b(w, 0);
  std::size_t r = 0;
  for (std::uint64_t label = 0; label < ipow(v, w); ++label) {
    for (std::size_t i = 0; i < a.num_rows(); ++i, ++r) {
      for (std::size_t c = 0; c < t; ++c) rows.at(r, c) = c < w ? (a.at(i, c) + b[c]) % v : a.at(i, c);
      rows.at(r, t) = static_cast<Symbol>(label);
    }
    for (std::size_t j = w; j-- > 0;) {
      if (++b[j] < v) break;
      b[j] = 0;
    }
  }
  return checked(AugmentedOA(v, t, s, std::move(rows)), "shifted AOA");
}

namespace {

// Shared body of the two DM-based resolvable arrays. `with_adder` appends the
// sixth column e + s_i and shifts columns 3 and 4 by s_i.
ResolvableOA dm_resolvable(const DifferenceMatrix& d, const CompleteMapping& sigma, bool with_adder) {
  require(d.k() == 4, Errc::WrongShape, "needs an (n,4,1) difference matrix");
  require(sigma.group() == d.group(), Errc::ParameterMismatch, "mapping and matrix use different groups");
  require_ok(check_dm(d), "input difference matrix");
  if (with_adder) require_ok(check_adder(d), "input adder");
  require_ok(check_complete_mapping(sigma), "input complete mapping");
  const GroupTable g(d.group());
  const std::uint32_t n = d.n();
  const std::size_t k = with_adder ? 6 : 5;
  const auto total = guarded_power(n, 3);
  Table rows(total, k);
  std::vector<std::uint32_t> labels(total);
  std::size_t r = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t si = with_adder ? (*d.adder())[i] : 0;
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t e = 0; e < n; ++e, ++r) {
        const std::uint32_t ue = g.add(g.add(u, e), si);
        rows.at(r, 0) = g.add(d.at(i, 0), u);
        rows.at(r, 1) = g.add(d.at(i, 1), u);
        rows.at(r, 2) = g.add(d.at(i, 2), ue);
        rows.at(r, 3) = g.add(d.at(i, 3), ue);
        rows.at(r, 4) = e;
        if (with_adder) rows.at(r, 5) = g.add(e, si);
        labels[r] = i * n + g.sub(e, sigma(u));
      }
    }
  }
  ResolvableOA out{OrthogonalArray(n, 3, std::move(rows)), ResolutionPartition(n, 3, 1, std::move(labels))};
  return checked(std::move(out), with_adder ? "DM-with-adder resolvable OA" : "DM resolvable OA");
}

}  // namespace

ResolvableOA dm_resolvable_oa5(const DifferenceMatrix& d, const CompleteMapping& sigma) {
  return dm_resolvable(d, sigma, false);
}

ResolvableOA dm_adder_resolvable_oa6(const DifferenceMatrix& d, const CompleteMapping& sigma) {
  require(d.adder().has_value(), Errc::AdderMissing, "difference matrix has no adder");
  return dm_resolvable(d, sigma, true);
}

}  // namespace aoa
