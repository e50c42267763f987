// SPDX-License-Identifier: Apache-2.0
#include "aoa/classical.hpp"
#include "aoa/dm.hpp"
#include "aoa/linear.hpp"
#include "aoa/numeric.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace aoa;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::IoError;
}

bool oracle_aoa(const AugmentedOA& a) {
  return oracle::is_aoa(oracle::rows_of(a.rows()), a.k(), a.s(), a.t(), a.v());
}

std::vector<std::vector<std::uint32_t>> rows_of(const Matrix& m) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

bool oracle_mds(const Matrix& m) {
  const auto& spec = m.field().spec();
  return oracle::is_mds(rows_of(m), spec.p, spec.m, spec.m == 1 ? std::vector<std::uint32_t>{} : spec.modulus);
}

}  // namespace

TEST_CASE("power-column arrays") {
  for (auto [t, q] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 4u}, {3u, 5u}, {4u, 5u}, {2u, 9u}, {3u, 8u}}) {
    auto a = vandermonde_oa(t, q);
    CAPTURE(t);
    CAPTURE(q);
    CHECK(a.k() == q + 1);
    CHECK(a.num_rows() == ipow(q, t));
    CHECK(oracle::is_oa(oracle::rows_of(a.rows()), a.k(), t, q));
  }
  for (auto q : {4u, 8u}) {
    auto a = vandermonde_oa_ext(q);
    CHECK(a.k() == q + 2);
    CHECK(oracle::is_oa(oracle::rows_of(a.rows()), a.k(), 3, q));
  }
  CHECK(code_of([] { vandermonde_oa(3, 6); }) == Errc::NotPrimePower);
  CHECK(code_of([] { vandermonde_oa(6, 5); }) == Errc::StrengthTooHigh);
  CHECK(code_of([] { vandermonde_oa_ext(9); }) == Errc::BadCharacteristic);
}

TEST_CASE("zero-sum arrays and their resolution") {
  for (auto [k, v] : {std::pair{4u, 2u}, {4u, 6u}, {6u, 3u}, {6u, 4u}, {4u, 5u}}) {
    CAPTURE(k);
    CAPTURE(v);
    auto oa = zero_sum_oa(k, v);
    auto rows = oracle::rows_of(oa.rows());
    for (const auto& r : rows) {
      std::uint64_t sum = 0;
      for (auto x : r) sum += x;
      CHECK(sum % v == 0);
    }
    CHECK(oracle::is_oa(rows, k, k - 1, v));
    auto a = zero_sum_aoa(k, v);
    CHECK(a.s() == 1);
    CHECK(a.t() == k - 1);
    CHECK(oracle_aoa(a));
  }
  CHECK(oracle::is_oa(oracle::rows_of(zero_sum_oa(5, 3).rows()), 5, 4, 3));
  CHECK(code_of([] { zero_sum_resolution(5, 3); }) == Errc::OddK);
}

TEST_CASE("equivalences between AOAs, resolvable OAs and OAs") {
  auto a = zero_sum_aoa(4, 3);  // AOA(1,3,4,3)
  auto r = aoa_to_resolvable(a);
  CHECK(r.partition.num_classes() == 9);
  CHECK(canonical_sort(resolvable_to_aoa(r)) == canonical_sort(a));

  auto oa = vandermonde_oa(3, 5);  // OA(3,6,5)
  auto split = oa_split(oa);
  CHECK(split.s() == 2);
  CHECK(split.k() == 5);
  CHECK(oracle_aoa(split));
  CHECK(canonical_sort(aoa_append(split)) == canonical_sort(oa));
  CHECK(code_of([&] { aoa_append(a); }) == Errc::WrongParameters);

  auto derived = oa_to_aoa(vandermonde_oa(4, 5), 2);  // AOA(2,4,4,5)
  CHECK(derived.k() == 4);
  CHECK(derived.aug_levels() == 25);
  CHECK(oracle_aoa(derived));
  CHECK(code_of([&] { oa_to_aoa(vandermonde_oa(4, 5), 1); }) == Errc::TooFewColumns);
}

TEST_CASE("products and shifts") {
  auto a = zero_sum_aoa(4, 2), b = zero_sum_aoa(4, 3);
  auto p = product_aoa(a, b);
  CHECK(p.v() == 6);
  CHECK(p.num_rows() == 216);
  CHECK(oracle_aoa(p));
  CHECK(code_of([&] { product_aoa(a, zero_sum_aoa(6, 2)); }) == Errc::ParameterMismatch);

  auto s2 = shift_aoa(vandermonde_oa(2, 2), 3);  // OA(2,3,2) -> AOA(2,3,3,2)
  CHECK(s2.k() == 3);
  CHECK(oracle_aoa(s2));
  auto s3 = shift_aoa(delete_columns(vandermonde_oa(3, 4), std::vector<std::size_t>{4}), 4);
  CHECK(s3.s() == 3);
  CHECK(oracle_aoa(s3));
  auto s1 = shift_aoa(delete_columns(vandermonde_oa(1, 3), std::vector<std::size_t>{3}), 3);
  CHECK(s1.s() == 1);
  CHECK(oracle_aoa(s1));
  CHECK(code_of([] { shift_aoa(vandermonde_oa(2, 3), 3); }) == Errc::WrongShape);
}

TEST_CASE("difference-matrix arrays") {
  for (auto n : {5u, 7u, 11u}) {
    auto r = dm_resolvable_oa5(dm_multiplicative(n), sigma_for(GroupSpec::cyclic(n)));
    auto a = resolvable_to_aoa(r);
    CHECK(a.k() == 5);
    CHECK(oracle_aoa(a));
  }
  for (auto n : {12u, 15u}) {
    auto d = catalog(n);
    auto a = resolvable_to_aoa(dm_adder_resolvable_oa6(d, sigma_for(d.group())));
    CHECK(a.k() == 6);
    CHECK(a.num_rows() == std::uint64_t{n} * n * n);
    CHECK(oracle_aoa(a));
  }
  CHECK(code_of([] { dm_multiplicative(9); }) == Errc::BadModulus);
  CHECK(code_of([] { dm_adder_resolvable_oa6(dm_multiplicative(5), sigma_for(GroupSpec::cyclic(5))); }) ==
        Errc::AdderMissing);
}

TEST_CASE("expansion follows the declared row order") {
  Field f = Field::of_order(3);
  Matrix m1(f, {{1, 1, 1, 1}}), m2(f, {{0, 0, 1, 1}, {0, 1, 0, 1}});
  auto a = expand(m1, m2);
  CHECK(a.s() == 1);
  CHECK(a.t() == 3);
  CHECK(oracle_aoa(a));
  // Row y*3 + x is y.M2 + x.M1 with y outer (first coordinate most
  // significant) and label y.
  for (std::uint32_t y0 = 0; y0 < 3; ++y0)
    for (std::uint32_t y1 = 0; y1 < 3; ++y1)
      for (std::uint32_t x = 0; x < 3; ++x) {
        const std::size_t r = (y0 * 3 + y1) * 3 + x;
        for (std::size_t c = 0; c < 4; ++c)
          CHECK(a.at(r, c) == (y0 * m2.at(0, c) + y1 * m2.at(1, c) + x * m1.at(0, c)) % 3);
        CHECK(a.aug(r) == y0 * 3 + y1);
      }
  CHECK(code_of([&] { expand(Matrix(f, {{1, 0, 1, 1}}), Matrix(f, {{0, 1, 1, 2}})); }) == Errc::PropertyTwoFailed);
  CHECK(code_of([&] { expand(Matrix(f, {{1, 1, 1, 1}}), Matrix(f, {{2, 2, 2, 2}})); }) == Errc::PropertyOneFailed);
  CHECK(codewords(m2).rows() == 9);
}

TEST_CASE("linear families expand to AOAs and pass the MDS oracle") {
  struct Case {
    GeneratorMatrix g;
    unsigned s, t;
    std::size_t k;
  };
  std::vector<Case> cases{
      {sum_zero_generator(3, 4), 1, 3, 4},          {sum_zero_generator(4, 5), 1, 4, 5},
      {sum_zero_generator(5, 6), 1, 5, 6},          {irreducible_twist_generator(5, 2, 4), 2, 4, 6},
      {irreducible_twist_generator(5, 1, 3), 1, 3, 6}, {irreducible_twist_generator(7, 1, 3), 1, 3, 8},
      {char2_conic_generator(4), 2, 3, 5},          {char2_conic_generator(8), 2, 3, 9},
      {char2_hyperoval_generator(4), 1, 3, 6},      {char2_hyperoval_generator(8), 1, 3, 10},
      {char2_wide_generator(4, 1), 1, 3, 6},
  };
  for (const auto& c : cases) {
    CAPTURE(c.k);
    CHECK(c.g.s() == c.s);
    CHECK(c.g.t() == c.t);
    CHECK(c.g.k() == c.k);
    CHECK(check_generator(c.g).ok());
    CHECK(oracle_mds(c.g.entries()));
    CHECK(oracle_mds(c.g.m1()));
    auto a = expand(c.g);
    CHECK(oracle_aoa(a));
    CHECK(certify(c.g).level == CertificateLevel::Expanded);
    CHECK(mds_subcode_report(c.g.m1(), c.g.m2()).linear_aoa());
  }
  auto big = char2_wide_generator(8, 3);
  CHECK(big.t() == 7);
  auto cert = certify(big);
  CHECK(cert.level == CertificateLevel::GeneratorOnly);
  CHECK(cert.verdict.ok());
  CHECK(code_of([] { char2_wide_generator(4, 3); }) == Errc::ParameterViolation);
  CHECK(code_of([] { sum_zero_generator(2, 4); }) == Errc::BadField);
  CHECK(code_of([] { irreducible_twist_generator(5, 2, 3); }) == Errc::ParameterViolation);
  CHECK(code_of([] { char2_hyperoval_generator(9); }) == Errc::BadCharacteristic);
}

TEST_CASE("full-length AOAs and duality") {
  auto [low, high] = full_length_aoas(vandermonde_generator(2, 5), 6);
  CHECK(low.s() == 2);
  CHECK(high.s() == 4);
  CHECK(oracle_aoa(expand(low)));
  CHECK(check_generator(high).ok());
  CHECK(code_of([] { full_length_aoas(Matrix(Field::of_order(3), {{1, 1, 0}}), 3); }) == Errc::NotMds);

  auto g = irreducible_twist_generator(5, 1, 3);  // AOA(1,3,6,5)
  auto d = dual_aoa_generator(g);
  CHECK(d.s() == 3);
  CHECK(d.t() == 5);
  CHECK(d.k() == 6);
  CHECK(check_generator(d).ok());
  CHECK(oracle_mds(d.entries()));
  CHECK(oracle_mds(d.m1()));
  auto dd = dual_aoa_generator(d);
  CHECK(dd.s() == g.s());
  CHECK(dd.t() == g.t());
  CHECK(same_row_space(dd.entries(), g.entries()));
  CHECK(same_row_space(dd.m1(), g.m1()));

  auto report = mds_subcode_report(g.m2(), g.m1());
  CHECK_FALSE(report.describe().empty());
}
