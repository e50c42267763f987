// SPDX-License-Identifier: Apache-2.0
// Single-entry mutations of valid objects. Every mutation that breaks the
// object must be reported with a counterexample the oracle can confirm by
// recounting it on the mutated rows.
#include <random>

#include "aoa/classical.hpp"
#include "aoa/dm.hpp"
#include "aoa/linear.hpp"
#include "aoa/verify.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace aoa;

namespace {

constexpr int kMutations = 120;

std::mt19937_64& rng() {
  static std::mt19937_64 g(77);
  return g;
}

std::uint32_t other_than(std::uint32_t x, std::uint32_t n) {
  return static_cast<std::uint32_t>((x + 1 + rng()() % (n - 1)) % n);
}

// Rows matching `tuple` on `cols`, restricted to rows whose value in `extra_col`
// equals `extra` when given.
std::uint64_t recount(const Table& t, const std::vector<std::size_t>& cols, const std::vector<std::uint32_t>& tuple,
                      std::optional<std::pair<std::size_t, std::uint32_t>> extra = std::nullopt) {
  std::uint64_t n = 0;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    bool match = !extra || t.at(r, extra->first) == extra->second;
    for (std::size_t j = 0; match && j < cols.size(); ++j) match = t.at(r, cols[j]) == tuple[j];
    n += match;
  }
  return n;
}

void confirm_tuple_count(const Verdict& v, const Table& rows) {
  REQUIRE_FALSE(v.ok());
  const auto& ce = *v.failure();
  REQUIRE(ce.columns.size() == ce.tuple.size());
  CHECK(ce.occurrences != ce.expected);
  CHECK(recount(rows, ce.columns, ce.tuple) == ce.occurrences);
}

std::vector<std::uint32_t> radices(const GroupSpec& g) {
  std::vector<std::uint32_t> r;
  for (std::size_t i = 0; i < g.components().size(); ++i) r.push_back(g.component_order(i));
  return r;
}

// Digit-wise a - b in the mixed-radix encoding, first component most significant.
std::uint32_t oracle_sub(std::uint32_t a, std::uint32_t b, const std::vector<std::uint32_t>& radix) {
  std::uint32_t out = 0, place = 1;
  for (std::size_t i = radix.size(); i-- > 0;) {
    const auto m = radix[i];
    out += ((a % m + m - b % m) % m) * place;
    a /= m, b /= m, place *= m;
  }
  return out;
}

std::uint32_t oracle_add(std::uint32_t a, std::uint32_t b, const std::vector<std::uint32_t>& radix) {
  std::uint32_t out = 0, place = 1;
  for (std::size_t i = radix.size(); i-- > 0;) {
    const auto m = radix[i];
    out += ((a % m + b % m) % m) * place;
    a /= m, b /= m, place *= m;
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> matrix_rows(const Matrix& m, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<std::uint32_t>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto c : cols) out[r].push_back(m.at(r, c));
  return out;
}

std::vector<std::size_t> all_cols(std::size_t n) {
  std::vector<std::size_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = i;
  return c;
}

}  // namespace

TEST_CASE("mutated orthogonal arrays") {
  auto base = vandermonde_oa(3, 5);
  REQUIRE(check_oa(base).ok());
  for (int i = 0; i < kMutations; ++i) {
    Table rows = base.rows();
    const auto r = rng()() % rows.rows(), c = rng()() % rows.cols();
    rows.at(r, c) = other_than(rows.at(r, c), 5);
    auto v = check_oa(OrthogonalArray(5, 3, rows));
    CHECK(v.failure()->property == "strength");
    confirm_tuple_count(v, rows);
    CHECK(v.failure()->expected == 1);
  }
}

TEST_CASE("mutated resolutions") {
  auto base = aoa_to_resolvable(zero_sum_aoa(4, 5));
  REQUIRE(check_resolution(base).ok());
  for (int i = 0; i < kMutations; ++i) {
    // Class sizes are a constructor invariant, so swap two rows between classes.
    auto labels = base.partition.class_of();
    const auto r = rng()() % labels.size();
    std::size_t r2;
    do r2 = rng()() % labels.size();
    while (labels[r2] == labels[r]);
    std::swap(labels[r], labels[r2]);
    ResolutionPartition p(5, base.array.t(), base.partition.s(), labels);
    auto v = check_resolution(base.array, p);
    REQUIRE_FALSE(v.ok());
    const auto& ce = *v.failure();
    CHECK(ce.property == "resolution");
    REQUIRE(ce.class_id);
    CHECK(ce.occurrences != ce.expected);
    // Recount on the array with the class label appended as a last column.
    Table with_class(base.array.num_rows(), base.array.k() + 1);
    for (std::size_t row = 0; row < with_class.rows(); ++row) {
      for (std::size_t c = 0; c < base.array.k(); ++c) with_class.at(row, c) = base.array.at(row, c);
      with_class.at(row, base.array.k()) = labels[row];
    }
    std::vector<std::size_t> cols;
    for (auto c : ce.columns)
      if (c < base.array.k()) cols.push_back(c);
    REQUIRE(cols.size() == ce.tuple.size());
    CHECK(recount(with_class, cols, ce.tuple, std::pair{base.array.k(), static_cast<std::uint32_t>(*ce.class_id)}) ==
          ce.occurrences);
  }
}

TEST_CASE("mutated augmented arrays") {
  auto base = expand(irreducible_twist_generator(5, 1, 3));  // AOA(1,3,6,5)
  REQUIRE(check_aoa(base).ok());
  int augmented = 0;
  for (int i = 0; i < kMutations; ++i) {
    Table rows = base.rows();
    const auto r = rng()() % rows.rows(), c = rng()() % rows.cols();
    const bool aug = c == base.k();
    rows.at(r, c) = other_than(rows.at(r, c), aug ? static_cast<std::uint32_t>(base.aug_levels()) : 5);
    AugmentedOA m(5, 3, 1, rows);
    auto v = check_aoa(m);
    CHECK(v.failure()->property == (aug ? "augmented" : "strength"));
    confirm_tuple_count(v, rows);
    augmented += aug;
  }
  CHECK(augmented > 0);
}

TEST_CASE("mutated difference matrices and adders") {
  for (auto n : {12u, 15u}) {
    auto base = catalog(n);
    const auto radix = radices(base.group());
    for (int i = 0; i < kMutations; ++i) {
      Table e = base.entries();
      const auto r = rng()() % n, c = rng()() % e.cols();
      e.at(r, c) = other_than(e.at(r, c), n);
      auto v = check_dm(DifferenceMatrix(base.group(), e));
      REQUIRE_FALSE(v.ok());
      const auto& ce = *v.failure();
      CHECK(ce.property == "difference");
      REQUIRE(ce.columns.size() == 2);
      std::uint64_t seen = 0;
      for (std::uint32_t row = 0; row < n; ++row)
        seen += oracle_sub(e.at(row, ce.columns[0]), e.at(row, ce.columns[1]), radix) == ce.tuple.at(0);
      CHECK(seen == ce.occurrences);
      CHECK(seen != 1);
    }
    // The constructor only accepts permutations, so transpose two adder entries
    // and compare against the oracle on the shifted matrix.
    int broken = 0;
    for (int i = 0; i < kMutations; ++i) {
      auto adder = *base.adder();
      const auto r = rng()() % n, r2 = (r + 1 + rng()() % (n - 1)) % n;
      std::swap(adder[r], adder[r2]);
      auto d = base.with_adder(adder);
      auto shifted = oracle::rows_of(base.entries());
      for (std::uint32_t row = 0; row < n; ++row)
        for (std::size_t c = 2; c < shifted[row].size(); ++c) shifted[row][c] = oracle_add(shifted[row][c], adder[row], radix);
      const bool expect_ok = oracle::is_product_dm(shifted, radix);
      auto v = check_adder(d);
      CHECK(v.ok() == expect_ok);
      if (v.ok()) continue;
      ++broken;
      const auto& ce = *v.failure();
      CHECK(ce.property == "shifted-difference");
      std::uint64_t seen = 0;
      for (std::uint32_t row = 0; row < n; ++row)
        seen += oracle_sub(shifted[row][ce.columns.at(0)], shifted[row][ce.columns.at(1)], radix) == ce.tuple.at(0);
      CHECK(seen == ce.occurrences);
      CHECK(seen != 1);
    }
    CHECK(broken >= kMutations / 2);
  }
}

TEST_CASE("mutated generators agree with the MDS oracle") {
  for (const auto& g : {irreducible_twist_generator(7, 1, 3), char2_conic_generator(8)}) {
    REQUIRE(check_generator(g).ok());
    const auto& spec = g.field().spec();
    const auto modulus = spec.m == 1 ? std::vector<std::uint32_t>{} : spec.modulus;
    const auto q = g.field().q();
    int broken = 0;
    for (int i = 0; i < kMutations; ++i) {
      const auto r = rng()() % g.t(), c = rng()() % g.k();
      std::vector<std::vector<Element>> rows(g.t());
      for (std::size_t a = 0; a < g.t(); ++a)
        for (std::size_t b = 0; b < g.k(); ++b) rows[a].push_back(g.entries().at(a, b));
      rows[r][c] = other_than(rows[r][c], q);
      GeneratorMatrix m(Matrix(g.field(), rows), g.s_split());
      const bool expect_ok = oracle::is_mds(matrix_rows(m.entries(), all_cols(g.k())), spec.p, spec.m, modulus) &&
                             oracle::is_mds(matrix_rows(m.m1(), all_cols(g.k())), spec.p, spec.m, modulus);
      auto v = check_generator(m);
      CHECK(v.ok() == expect_ok);
      if (v.ok()) continue;
      ++broken;
      const auto& ce = *v.failure();
      const Matrix& block = ce.property == "mds" ? m.entries() : m.m1();
      CHECK((ce.property == "mds" || ce.property == "s-rows"));
      CHECK(ce.columns.size() == block.rows());
      // The reported columns are dependent: the square submatrix is not invertible.
      CHECK_FALSE(oracle::is_mds(matrix_rows(block, ce.columns), spec.p, spec.m, modulus));
    }
    CHECK(broken >= kMutations / 2);
  }
}

TEST_CASE("mutated complete mappings") {
  for (auto name : {"Z6xZ2", "Z3xF8", "Z15", "Z2xZ2xZ2"}) {
    auto g = parse_group(name);
    auto base = sigma_for(g);
    REQUIRE(check_complete_mapping(base).ok());
    const auto n = g.order();
    // Z3xF8 is an additive field component, so the digit arithmetic below does
    // not apply; there only the bijection half is recounted.
    const bool digits = std::string(name) != "Z3xF8";
    const auto radix = radices(g);
    for (int i = 0; i < kMutations; ++i) {
      auto table = base.table();
      const auto u = rng()() % n;
      table[u] = other_than(table[u], n);
      auto v = check_complete_mapping(CompleteMapping(g, table));
      REQUIRE_FALSE(v.ok());
      const auto& ce = *v.failure();
      CHECK(ce.occurrences != 1);
      if (ce.property == "bijection") {
        CHECK(std::count(table.begin(), table.end(), ce.tuple.at(0)) == static_cast<long>(ce.occurrences));
      } else {
        CHECK(ce.property == "complete");
        if (digits) {
          std::uint64_t seen = 0;
          for (std::uint32_t x = 0; x < n; ++x) seen += oracle_add(x, table[x], radix) == ce.tuple.at(0);
          CHECK(seen == ce.occurrences);
        }
      }
    }
  }
}
