// SPDX-License-Identifier: Apache-2.0
#include <set>

#include "aoa/error.hpp"
#include "aoa/finite_field.hpp"
#include "aoa/group.hpp"
#include "aoa/matrix.hpp"
#include "aoa/numeric.hpp"
#include "aoa/polynomial.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace aoa;

namespace {
const std::vector<std::uint32_t> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49};
}

TEST_CASE("prime powers and factorization") {
  CHECK(prime_power(1) == std::nullopt);
  CHECK(prime_power(6) == std::nullopt);
  CHECK(prime_power(12) == std::nullopt);
  auto pp = prime_power(27);
  REQUIRE(pp);
  CHECK(pp->p == 3);
  CHECK(pp->m == 3);
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(checked_pow(2, 64) == std::nullopt);
  CHECK(checked_pow(3, 4) == 81u);
  CHECK(binomial(10, 3) == 120);
  std::size_t count = 0;
  for_each_subset(6, 3, [&](const auto&) { return ++count, true; });
  CHECK(count == 20);
}

TEST_CASE("field arithmetic agrees with schoolbook reduction") {
  for (auto q : kOrders) {
    CAPTURE(q);
    Field f = Field::of_order(q);
    const auto& spec = f.spec();
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) {
        CHECK(f.mul(a, b) == oracle::gf_mul(a, b, spec.p, spec.m, spec.m == 1 ? std::vector<std::uint32_t>{} : spec.modulus));
        CHECK(f.add(a, b) == oracle::gf_add(a, b, spec.p, spec.m));
        CHECK(f.sub(f.add(a, b), b) == a);
      }
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, 0) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
    }
  }
}

TEST_CASE("field axioms: distributivity and associativity") {
  for (auto q : {4u, 8u, 9u}) {
    Field f = Field::of_order(q);
    for (Element a = 0; a < q; ++a)
      for (Element b = 0; b < q; ++b)
        for (Element c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
  }
}

TEST_CASE("canonical moduli are the first irreducible in rank order") {
  CHECK(Field::create(2, 2).spec().modulus == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::create(2, 3).spec().modulus == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(Field::create(3, 2).spec().modulus == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::create(2, 4).spec().modulus == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(Field::create(5, 1).spec().modulus.empty());
  // Rank order: every monic polynomial of the same degree with smaller rank is reducible.
  for (auto q : {4u, 8u, 9u, 16u, 25u, 27u}) {
    Field f = Field::of_order(q);
    Field base = Field::create(f.p());
    for (std::uint64_t r = 0;; ++r) {
      Polynomial cand = monic_from_rank(base, f.m(), r);
      if (cand.coeffs() == f.spec().modulus) break;
      CHECK_FALSE(is_irreducible(base, cand));
    }
  }
}

TEST_CASE("explicit modulus and errors") {
  Field f = Field::with_modulus(2, {1, 0, 1, 1});  // x^3 + x^2 + 1
  CHECK(f.q() == 8);
  CHECK(f.mul(4, 2) == 5);  // x^3 = x^2 + 1
  CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 0, 1}), Error);  // x^3 + 1 = (x+1)(x^2+x+1)
  CHECK_THROWS_AS(Field::of_order(6), Error);
  CHECK_THROWS_AS(Field::create(4, 1), Error);
  CHECK_THROWS_AS(Field::of_order(7).inv(0), Error);
  CHECK(Field::of_order(7).from_int(-1) == 6);
  CHECK(Field::of_order(9).from_int(4) == 1);
}

TEST_CASE("primitive elements and the char-2 alpha") {
  for (auto q : kOrders) {
    Field f = Field::of_order(q);
    Element g = find_primitive(f);
    CHECK(f.order_of(g) == q - 1);
    for (Element a = 1; a < g; ++a) CHECK(f.order_of(a) != q - 1);
  }
  for (auto q : {4u, 8u, 16u, 32u}) {
    Field f = Field::of_order(q);
    Element alpha = special_alpha_char2(f);
    std::set<Element> sums;
    for (Element a = 1; a < q; ++a) sums.insert(f.add(a, f.inv(a)));
    CHECK_FALSE(sums.count(alpha));
    for (Element x = 0; x < q; ++x) CHECK(f.add(f.add(f.mul(x, x), f.mul(alpha, x)), 1) != 0);
    for (Element b = 1; b < alpha; ++b) CHECK(sums.count(b));
  }
  CHECK_THROWS_AS(special_alpha_char2(Field::of_order(9)), Error);
}

TEST_CASE("polynomial division identity") {
  Field f = Field::of_order(5);
  Polynomial a({1, 2, 3, 4, 1}), b({2, 0, 1});
  auto [quo, rem] = poly_divmod(f, a, b);
  CHECK(rem.degree() < b.degree());
  CHECK(poly_add(f, poly_mul(f, quo, b), rem) == a);
  CHECK_THROWS_AS(poly_divmod(f, a, Polynomial{}), Error);
  CHECK(poly_eval(f, Polynomial({1, 1}), 4) == 0);
  CHECK(find_irreducible(f, 2) == Polynomial({2, 0, 1}));
}

TEST_CASE("rank, null space and completion against brute force") {
  Field f = Field::of_order(4);
  Matrix m(f, {{1, 2, 3, 0, 1}, {0, 1, 1, 1, 2}, {1, 3, 2, 1, 3}});  // row 3 = row 1 + row 2
  auto words = oracle::all_codewords({{1, 2, 3, 0, 1}, {0, 1, 1, 1, 2}, {1, 3, 2, 1, 3}}, 2, 2, {1, 1, 1});
  CHECK(rank(m) == oracle::rank_by_count(words, 4));
  CHECK(rank(m) == 2);
  Matrix ns = null_space(m);
  CHECK(ns.rows() == 3);
  for (std::size_t i = 0; i < ns.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) {
      Element dot = 0;
      for (std::size_t c = 0; c < 5; ++c) dot = f.add(dot, f.mul(ns.at(i, c), m.at(j, c)));
      CHECK(dot == 0);
    }
  Matrix part(f, {{1, 2, 3, 0, 1}});
  Matrix added = complete_basis(part, m);
  CHECK(added.rows() == 1);
  CHECK(same_row_space(stack(part, added), m));
  auto x = solve_left(m, std::vector<Element>{1, 3, 2, 1, 3});
  REQUIRE(x);
  CHECK(combine_rows(m, *x) == std::vector<Element>{1, 3, 2, 1, 3});
  CHECK_FALSE(solve_left(m, std::vector<Element>{1, 0, 0, 0, 0}));
}

TEST_CASE("groups: mixed radix, law and parsing") {
  GroupSpec g = parse_group("Z6xZ2");
  CHECK(g.order() == 12);
  CHECK(g.encode({3, 1}) == 7);
  CHECK(g.decode(7) == std::vector<std::uint32_t>{3, 1});
  CHECK(g.add(g.encode({5, 1}), g.encode({2, 1})) == g.encode({1, 0}));
  GroupSpec h = parse_group("Z3xF8");
  CHECK(h.order() == 24);
  CHECK(to_string(h) == "Z3xF8");
  for (std::uint32_t x = 0; x < h.order(); ++x) CHECK(h.add(x, h.neg(x)) == 0);
  GroupTable t(h);
  for (std::uint32_t x = 0; x < 24; ++x)
    for (std::uint32_t y = 0; y < 24; ++y) CHECK(t.add(x, y) == h.add(x, y));
  CHECK_THROWS_AS(parse_group("Z0"), Error);
  CHECK_THROWS_AS(parse_group("Q8"), Error);
  CHECK_THROWS_AS(parse_group("Z3xF6"), Error);
  CHECK(parse_group("Z15") == GroupSpec::cyclic(15));
}
