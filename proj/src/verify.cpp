// SPDX-License-Identifier: Apache-2.0
#include "aoa/verify.hpp"

#include <sstream>

#include "aoa/numeric.hpp"
#include "aoa/simd/kernels.hpp"

namespace aoa {

namespace {

// Column-major copy of a table; the counting kernels stream whole columns.
class ColumnStore {
 public:
  explicit ColumnStore(const Table& t) : rows_(t.rows()), cols_(t.cols(), std::vector<std::uint32_t>(t.rows())) {
    for (std::size_t r = 0; r < t.rows(); ++r)
      for (std::size_t c = 0; c < t.cols(); ++c) cols_[c][r] = t.at(r, c);
  }
  std::size_t rows() const noexcept { return rows_; }
  const std::uint32_t* column(std::size_t c) const noexcept { return cols_[c].data(); }

 private:
  std::size_t rows_;
  std::vector<std::vector<std::uint32_t>> cols_;
};

struct Nonuniform {
  std::vector<std::uint32_t> tuple;
  std::uint32_t count;
};

// Counts joint occurrences of the selected columns (first column most
// significant) and reports the smallest tuple whose count differs from
// `expected`.
class TupleCounter {
 public:
  std::optional<Nonuniform> run(std::span<const std::uint32_t* const> cols,
                                std::span<const std::uint32_t> radices, std::size_t rows,
                                std::uint32_t expected) {
    weights_.assign(radices.size(), 1);
    std::uint64_t total = 1;
    for (std::size_t j = radices.size(); j-- > 0;) {
      weights_[j] = static_cast<std::uint32_t>(total);
      total *= radices[j];
      require(total <= UINT32_MAX, Errc::DeskGuardExceeded, "tuple space exceeds 2^32");
    }
    codes_.resize(rows);
    simd::encode_tuples(cols, weights_, rows, codes_.data());
    counts_.assign(total, 0);
    for (std::size_t r = 0; r < rows; ++r) ++counts_[codes_[r]];
    std::size_t bad = simd::first_mismatch(counts_, expected);
    if (bad == counts_.size()) return std::nullopt;
    Nonuniform out{std::vector<std::uint32_t>(radices.size()), counts_[bad]};
    std::uint64_t code = bad;
    for (std::size_t j = radices.size(); j-- > 0;) {
      out.tuple[j] = static_cast<std::uint32_t>(code % radices[j]);
      code /= radices[j];
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> weights_;
  std::vector<std::uint32_t> codes_;
  std::vector<std::uint32_t> counts_;
};

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

std::string join(const std::vector<std::uint32_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

// Checks every `r`-subset of the first `k` columns, optionally followed by one
// fixed extra column, for uniform tuple counts.
Verdict sweep(const ColumnStore& store, std::size_t k, std::size_t r, std::uint32_t v,
              std::optional<std::pair<std::size_t, std::uint32_t>> extra, bool extra_first,
              std::uint32_t expected, const std::string& property) {
  TupleCounter counter;
  Verdict verdict = Verdict::pass();
  std::vector<const std::uint32_t*> cols;
  std::vector<std::uint32_t> radices;
  for_each_subset(k, r, [&](const std::vector<std::size_t>& subset) {
    cols.clear();
    radices.clear();
    std::vector<std::size_t> named;
    if (extra && extra_first) {
      cols.push_back(store.column(extra->first));
      radices.push_back(extra->second);
    }
    for (auto c : subset) {
      cols.push_back(store.column(c));
      radices.push_back(v);
      named.push_back(c);
    }
    if (extra && !extra_first) {
      cols.push_back(store.column(extra->first));
      radices.push_back(extra->second);
      named.push_back(extra->first);
    }
    auto bad = counter.run(cols, radices, store.rows(), expected);
    if (!bad) return true;
    Counterexample ce;
    ce.property = property;
    ce.columns = std::move(named);
    ce.occurrences = bad->count;
    ce.expected = expected;
    if (extra && extra_first) {
      ce.class_id = bad->tuple.front();
      ce.tuple.assign(bad->tuple.begin() + 1, bad->tuple.end());
    } else {
      ce.tuple = std::move(bad->tuple);
    }
    verdict = Verdict::fail(std::move(ce));
    return false;
  });
  return verdict;
}

Verdict fail_with(std::string property, std::string detail) {
  Counterexample ce;
  ce.property = std::move(property);
  ce.detail = std::move(detail);
  return Verdict::fail(std::move(ce));
}

// Rank of the square-or-wide submatrix on the given columns.
std::size_t column_rank(const Matrix& m, std::span<const std::size_t> cols) {
  return rank(select_columns(m, cols));
}

}  // namespace

std::string Verdict::describe() const {
  if (ok()) return "ok";
  const auto& c = *failure_;
  std::ostringstream os;
  os << "FAIL [" << c.property << "]";
  if (!c.columns.empty()) os << " columns {" << join(c.columns) << "}";
  if (c.class_id) os << " class " << *c.class_id;
  if (!c.tuple.empty()) os << " tuple (" << join(c.tuple) << ")";
  if (c.expected != 0 || c.occurrences != 0) os << " occurs " << c.occurrences << "x, expected " << c.expected;
  if (!c.detail.empty()) os << ": " << c.detail;
  return os.str();
}

void require_ok(const Verdict& v, const std::string& context) {
  if (!v.ok()) throw VerificationError(context, v);
}

Verdict check_oa(const OrthogonalArray& a, unsigned t) {
  require(t >= 1 && t <= a.k(), Errc::DimensionMismatch, "strength must lie in [1, k]");
  auto cells = checked_pow(a.v(), t, UINT32_MAX);
  if (!cells || a.num_rows() % *cells != 0)
    return fail_with("strength", "row count " + std::to_string(a.num_rows()) +
                                     " is not a multiple of v^" + std::to_string(t));
  const auto lambda = static_cast<std::uint32_t>(a.num_rows() / *cells);
  ColumnStore store(a.rows());
  return sweep(store, a.k(), t, a.v(), std::nullopt, false, lambda, "strength");
}

Verdict check_resolution(const OrthogonalArray& a, const ResolutionPartition& p) {
  if (p.class_of().size() != a.num_rows())
    return fail_with("resolution", "partition does not cover the array");
  const unsigned s = p.s();
  if (s > a.k()) return fail_with("resolution", "sub-strength exceeds column count");
  // Append the class label as an extra column and require each
  // (class, s-tuple) exactly once: that is exactly "every class is an OA(s,k,v)".
  Table with_class(a.num_rows(), a.k() + 1);
  for (std::size_t r = 0; r < a.num_rows(); ++r) {
    for (std::size_t c = 0; c < a.k(); ++c) with_class.at(r, c) = a.at(r, c);
    with_class.at(r, a.k()) = p.class_of()[r];
  }
  ColumnStore store(with_class);
  auto classes = static_cast<std::uint32_t>(p.num_classes());
  const auto per_class = ipow(a.v(), s);
  if (per_class * classes != a.num_rows())
    return fail_with("resolution", "class count does not match v^(t-s)");
  return sweep(store, a.k(), s, a.v(), std::make_pair(a.k(), classes), true, 1, "resolution");
}

Verdict check_aoa(const AugmentedOA& a) {
  ColumnStore store(a.rows());
  auto first = sweep(store, a.k(), a.t(), a.v(), std::nullopt, false, 1, "strength");
  if (!first.ok()) return first;
  return sweep(store, a.k(), a.s(), a.v(),
               std::make_pair(a.k(), static_cast<std::uint32_t>(a.aug_levels())), false, 1,
               "augmented");
}

Verdict check_dm(const DifferenceMatrix& d) {
  const GroupTable g(d.group());
  const std::uint32_t n = d.n();
  std::vector<std::uint32_t> counts(n);
  for (std::size_t j = 0; j < d.k(); ++j) {
    for (std::size_t l = j + 1; l < d.k(); ++l) {
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t i = 0; i < n; ++i) ++counts[g.sub(d.at(i, j), d.at(i, l))];
      std::size_t bad = simd::first_mismatch(counts, 1);
      if (bad == counts.size()) continue;
      Counterexample ce;
      ce.property = "difference";
      ce.columns = {j, l};
      ce.tuple = {static_cast<std::uint32_t>(bad)};
      ce.occurrences = counts[bad];
      ce.expected = 1;
      return Verdict::fail(std::move(ce));
    }
  }
  return Verdict::pass();
}

DifferenceMatrix shifted_by_adder(const DifferenceMatrix& d) {
  require(d.adder().has_value(), Errc::AdderMissing, "difference matrix has no adder");
  const GroupTable g(d.group());
  Table shifted = d.entries();
  const auto& s = *d.adder();
  for (std::uint32_t i = 0; i < d.n(); ++i)
    for (std::size_t j = 2; j < d.k(); ++j) shifted.at(i, j) = g.add(d.at(i, j), s[i]);
  return DifferenceMatrix(d.group(), std::move(shifted));
}

Verdict check_adder(const DifferenceMatrix& d) {
  require(d.adder().has_value(), Errc::AdderMissing, "difference matrix has no adder");
  std::vector<std::uint32_t> counts(d.n(), 0);
  for (auto x : *d.adder()) ++counts[x];
  if (std::size_t bad = simd::first_mismatch(counts, 1); bad != counts.size()) {
    Counterexample ce;
    ce.property = "adder-permutation";
    ce.tuple = {static_cast<std::uint32_t>(bad)};
    ce.occurrences = counts[bad];
    ce.expected = 1;
    return Verdict::fail(std::move(ce));
  }
  auto v = check_dm(shifted_by_adder(d));
  if (v.ok()) return v;
  auto ce = *v.failure();
  ce.property = "shifted-difference";
  return Verdict::fail(std::move(ce));
}

Verdict check_mds_generator(const Matrix& m, unsigned t) {
  require(m.rows() == t, Errc::DimensionMismatch,
          "generator has " + std::to_string(m.rows()) + " rows, expected t = " + std::to_string(t));
  if (t > m.cols()) return fail_with("mds", "t exceeds code length");
  Verdict verdict = Verdict::pass();
  for_each_subset(m.cols(), t, [&](const std::vector<std::size_t>& cols) {
    if (column_rank(m, cols) == t) return true;
    Counterexample ce;
    ce.property = "mds";
    ce.columns = cols;
    ce.detail = "columns are linearly dependent";
    verdict = Verdict::fail(std::move(ce));
    return false;
  });
  return verdict;
}

Verdict check_s_rows(const Matrix& m, std::span<const std::size_t> rows) {
  Matrix sub = select_rows(m, rows);
  const std::size_t s = rows.size();
  if (s == 0) return Verdict::pass();
  if (s > m.cols()) return fail_with("s-rows", "s exceeds code length");
  Verdict verdict = Verdict::pass();
  for_each_subset(m.cols(), s, [&](const std::vector<std::size_t>& cols) {
    if (column_rank(sub, cols) == s) return true;
    Counterexample ce;
    ce.property = "s-rows";
    ce.columns = cols;
    ce.detail = "columns of the designated rows are linearly dependent";
    verdict = Verdict::fail(std::move(ce));
    return false;
  });
  return verdict;
}

Verdict check_s_rows(const Matrix& m, unsigned s) {
  require(s <= m.rows(), Errc::DimensionMismatch, "s exceeds row count");
  std::vector<std::size_t> rows(s);
  for (unsigned i = 0; i < s; ++i) rows[i] = i;
  return check_s_rows(m, rows);
}

Verdict check_generator(const GeneratorMatrix& g) {
  auto v = check_mds_generator(g.entries(), static_cast<unsigned>(g.t()));
  if (!v.ok() || !g.s_split()) return v;
  return check_s_rows(g.entries(), *g.s_split());
}

Verdict check_complete_mapping(const CompleteMapping& sigma) {
  const auto& g = sigma.group();
  const std::uint32_t n = g.order();
  std::vector<std::uint32_t> image(n, 0), sum(n, 0);
  for (std::uint32_t u = 0; u < n; ++u) {
    ++image[sigma(u)];
    ++sum[g.add(u, sigma(u))];
  }
  std::size_t bad = simd::first_mismatch(image, 1);
  if (bad != image.size()) {
    Counterexample ce;
    ce.property = "bijection";
    ce.tuple = {static_cast<std::uint32_t>(bad)};
    ce.occurrences = image[bad];
    ce.expected = 1;
    ce.detail = "sigma is not a bijection";
    return Verdict::fail(std::move(ce));
  }
  bad = simd::first_mismatch(sum, 1);
  if (bad != sum.size()) {
    Counterexample ce;
    ce.property = "complete";
    ce.tuple = {static_cast<std::uint32_t>(bad)};
    ce.occurrences = sum[bad];
    ce.expected = 1;
    ce.detail = "u -> u + sigma(u) is not a bijection";
    return Verdict::fail(std::move(ce));
  }
  return Verdict::pass();
}

}  // namespace aoa
