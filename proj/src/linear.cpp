// SPDX-License-Identifier: Apache-2.0
#include "aoa/linear.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "aoa/numeric.hpp"
#include "aoa/polynomial.hpp"

namespace aoa {

namespace {

Matrix build_rows(const Field& f, std::size_t rows, std::size_t cols,
                  const std::function<Element(std::size_t, std::size_t)>& entry) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entry(r, c));
  return m;
}

Field char2_field(std::uint32_t q) {
  Field f = Field::of_order(q);
  require(f.p() == 2 && q >= 4, Errc::BadCharacteristic,
          "needs q = 2^m >= 4, got q = " + std::to_string(q));
  return f;
}

GeneratorMatrix checked(GeneratorMatrix g, const std::string& what) {
  auto v = check_generator(g);
  if (!v.ok()) throw VerificationError(what, v);
  return g;
}

}  // namespace

Table codewords(const Matrix& g) {
  const Field& f = g.field();
  const std::uint32_t q = f.q();
  const std::size_t rows = g.rows(), k = g.cols();
  const auto total = guarded_power(q, static_cast<unsigned>(rows));
  Table out(total, k);
  if (rows == 0) return out;

  // scaled[j][a] is a * (row j).
  std::vector<std::vector<Element>> scaled(rows, std::vector<Element>(std::size_t{q} * k));
  for (std::size_t j = 0; j < rows; ++j)
    for (Element a = 0; a < q; ++a)
      for (std::size_t c = 0; c < k; ++c) scaled[j][a * k + c] = f.mul(a, g.at(j, c));

  // partial[j] = sum over i <= j of x_i * row_i.
  std::vector<std::vector<Element>> partial(rows, std::vector<Element>(k, 0));
  std::vector<Element> x(rows, 0);
  auto refresh = [&](std::size_t from) {
    for (std::size_t j = from; j < rows; ++j)
      for (std::size_t c = 0; c < k; ++c)
        partial[j][c] = f.add(j ? partial[j - 1][c] : 0, scaled[j][x[j] * k + c]);
  };
  refresh(0);
  for (std::uint64_t r = 0; r < total; ++r) {
    auto row = out.row(r);
    std::copy(partial[rows - 1].begin(), partial[rows - 1].end(), row.begin());
    std::size_t j = rows;
    while (j > 0 && x[j - 1] + 1 == q) x[--j] = 0;
    if (j == 0) break;
    ++x[j - 1];
    refresh(j - 1);
  }
  return out;
}

AugmentedOA expand(const Matrix& m1, const Matrix& m2) {
  const std::size_t s = m1.rows(), t = s + m2.rows();
  require(s >= 1 && s < t, Errc::ParameterViolation, "expansion needs 1 <= s < t");
  require(m1.cols() == m2.cols(), Errc::DimensionMismatch, "M1 and M2 differ in length");
  require(m1.field() == m2.field(), Errc::DimensionMismatch, "M1 and M2 live over different fields");
  const Matrix full = stack(m1, m2);
  if (auto v = check_mds_generator(full, static_cast<unsigned>(t)); !v.ok())
    fail(Errc::PropertyOneFailed, "some t columns are dependent: " + v.describe());
  if (auto v = check_s_rows(full, static_cast<unsigned>(s)); !v.ok())
    fail(Errc::PropertyTwoFailed, "some s columns of M1 are dependent: " + v.describe());

  const std::uint32_t q = m1.field().q();
  const std::size_t k = m1.cols();
  Table words = codewords(stack(m2, m1));
  const std::uint64_t per_label = ipow(q, static_cast<unsigned>(s));
  Table rows(words.rows(), k + 1);
  for (std::size_t r = 0; r < words.rows(); ++r) {
    auto src = words.row(r);
    auto dst = rows.row(r);
    std::copy(src.begin(), src.end(), dst.begin());
    dst[k] = static_cast<Symbol>(r / per_label);
  }
  AugmentedOA a(q, static_cast<unsigned>(t), static_cast<unsigned>(s), std::move(rows));
  require_ok(check_aoa(a), "expanded generator");
  return a;
}

AugmentedOA expand(const GeneratorMatrix& g) { return expand(g.m1(), g.m2()); }

LinearCertificate certify(const GeneratorMatrix& g, std::uint64_t expansion_limit) {
  require(g.s_split().has_value(), Errc::ParameterViolation, "generator has no designated s rows");
  Verdict v = check_generator(g);
  const auto rows = checked_pow(g.field().q(), static_cast<unsigned>(g.t()), UINT64_MAX);
  const bool expandable = rows && *rows <= expansion_limit && *rows <= desk_guard();
  if (!v.ok() || !expandable) return {CertificateLevel::GeneratorOnly, v};
  return {CertificateLevel::Expanded, check_aoa(expand(g))};
}

std::pair<GeneratorMatrix, GeneratorMatrix> full_length_aoas(const Matrix& g, unsigned t) {
  require(g.cols() == t, Errc::WrongShape,
          "generator has " + std::to_string(g.cols()) + " columns, expected t = " + std::to_string(t));
  const auto s = static_cast<unsigned>(g.rows());
  require(s >= 1 && s < t, Errc::ParameterViolation, "needs 1 <= s < t");
  require(check_mds_generator(g, s).ok(), Errc::NotMds, "input generator is not MDS");
  const Matrix unit = Matrix::identity(g.field(), t);
  const Matrix dual = null_space(g);
  GeneratorMatrix first(g, complete_basis(g, unit));
  GeneratorMatrix second(dual, complete_basis(dual, unit));
  return {checked(std::move(first), "AOA(s,t,t,q) generator"),
          checked(std::move(second), "AOA(t-s,t,t,q) generator")};
}

GeneratorMatrix dual_aoa_generator(const GeneratorMatrix& g) {
  const std::size_t s = g.s(), t = g.t(), k = g.k();
  require(k > t, Errc::ParameterViolation, "dual needs k > t");
  require(rank(g.entries()) == t, Errc::NotMds, "generator rows are dependent");
  Matrix m1 = null_space(g.entries());
  Matrix sub_dual = null_space(g.m1());
  require(sub_dual.rows() == k - s, Errc::NotMds, "designated rows are dependent");
  Matrix m2 = complete_basis(m1, sub_dual);
  GeneratorMatrix out(m1, m2);
  if (!check_generator(out).ok()) fail(Errc::NotMds, "dual generator failed the MDS sweeps");
  return out;
}

GeneratorMatrix sum_zero_generator(std::uint32_t q, unsigned k) {
  Field f = Field::of_order(q);
  require(q > 2, Errc::BadField, "needs q > 2");
  require(k >= 3, Errc::ParameterViolation, "needs k >= 3");
  const Element km2 = f.from_int(static_cast<std::int64_t>(k) - 2);
  Element alpha = 1;
  while (f.add(alpha, km2) == 0) ++alpha;  // q > 2 leaves at least one candidate
  Matrix m1(f, 1, k);
  m1.set(0, 0, f.add(alpha, km2));
  m1.set(0, 1, f.neg(alpha));
  for (unsigned c = 2; c < k; ++c) m1.set(0, c, f.neg(1));
  Matrix ones = build_rows(f, 1, k, [](std::size_t, std::size_t) { return Element{1}; });
  Matrix m2 = complete_basis(m1, null_space(ones));
  return checked(GeneratorMatrix(m1, m2), "sum-zero generator");
}

GeneratorMatrix irreducible_twist_generator(std::uint32_t q, unsigned s, unsigned t) {
  Field f = Field::of_order(q);
  require(q >= 3, Errc::ParameterViolation, "needs q >= 3");
  require(s >= 1 && s < t && t <= q, Errc::ParameterViolation, "needs 1 <= s < t <= q");
  require(t - s >= 2, Errc::ParameterViolation, "needs t - s >= 2");
  const Polynomial h = find_irreducible(f, t - s);
  const std::size_t k = std::size_t{q} + 1;
  auto power = [&](Element a, std::size_t j) { return f.pow(a, j); };  // 0^0 = 1
  Matrix m2 = build_rows(f, t - s, k, [&](std::size_t j, std::size_t c) -> Element {
    return c < q ? power(static_cast<Element>(c), j) : 0;
  });
  Matrix m1 = build_rows(f, s, k, [&](std::size_t j, std::size_t c) -> Element {
    if (c == q) return j + 1 == s ? 1 : 0;
    const auto a = static_cast<Element>(c);
    return f.mul(power(a, j), poly_eval(f, h, a));
  });
  return checked(GeneratorMatrix(m1, m2), "irreducible-twist generator");
}

GeneratorMatrix char2_conic_generator(std::uint32_t q) {
  Field f = char2_field(q);
  const std::size_t k = std::size_t{q} + 1;
  Matrix m1 = build_rows(f, 2, k, [&](std::size_t r, std::size_t c) -> Element {
    if (c == q) return r == 1 ? 1 : 0;
    return r == 0 ? 1 : f.mul(static_cast<Element>(c), static_cast<Element>(c));
  });
  Matrix m2 = build_rows(f, 1, k, [&](std::size_t, std::size_t c) -> Element {
    return c == q ? 0 : static_cast<Element>(c);
  });
  return checked(GeneratorMatrix(m1, m2), "conic generator");
}

GeneratorMatrix char2_hyperoval_generator(std::uint32_t q) {
  Field f = char2_field(q);
  const Element alpha = special_alpha_char2(f);
  const Polynomial h(std::vector<Element>{1, alpha, 1});
  const std::size_t k = std::size_t{q} + 2;
  Matrix m1 = build_rows(f, 1, k, [&](std::size_t, std::size_t c) -> Element {
    return c < q ? poly_eval(f, h, static_cast<Element>(c)) : 1;
  });
  Matrix m2 = build_rows(f, 2, k, [&](std::size_t r, std::size_t c) -> Element {
    const auto a = static_cast<Element>(c);
    if (r == 0) return c < q ? f.mul(alpha, a) : (c == q ? 0 : 1);
    return c < q ? f.mul(a, a) : (c == q ? 1 : 0);
  });
  return checked(GeneratorMatrix(m1, m2), "hyperoval generator");
}

GeneratorMatrix char2_wide_generator(std::uint32_t q, unsigned s) {
  Field f = char2_field(q);
  require(s == 1 || s == 3, Errc::ParameterViolation, "designated block size must be 1 or 3");
  require(s < q - 1, Errc::ParameterViolation, "needs s < q - 1");
  const std::size_t k = std::size_t{q} + 2, t = q - 1;
  // Row i belongs to the nonzero element a = i + 1: (1, a, a^2, e_i).
  Matrix base = build_rows(f, t, k, [&](std::size_t i, std::size_t c) -> Element {
    const auto a = static_cast<Element>(i + 1);
    switch (c) {
      case 0: return 1;
      case 1: return a;
      case 2: return f.mul(a, a);
      default: return c - 3 == i ? 1 : 0;
    }
  });
  std::vector<std::vector<Element>> coeffs;
  if (s == 1) {
    std::vector<Element> c(t, 1);
    c[0] = find_primitive(f);
    coeffs.push_back(std::move(c));
  } else {
    for (std::uint64_t e : {std::uint64_t{0}, std::uint64_t{q - 3}, std::uint64_t{q - 2}}) {
      std::vector<Element> c(t);
      for (std::size_t i = 0; i < t; ++i) c[i] = f.pow(static_cast<Element>(i + 1), e);
      coeffs.push_back(std::move(c));
    }
  }
  Matrix m1(f, coeffs.size(), k);
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    auto row = combine_rows(base, coeffs[r]);
    for (std::size_t c = 0; c < k; ++c) m1.set(r, c, row[c]);
  }
  Matrix m2 = complete_basis(m1, base);
  return checked(GeneratorMatrix(m1, m2), "wide generator");
}

std::string SubcodeReport::describe() const {
  std::ostringstream os;
  os << "code: " << code_rows << " rows, dimension " << code_dim << (code_mds ? ", MDS" : ", not MDS");
  if (code_dim < code_rows) os << " (dimension deficiency " << code_rows - code_dim << ")";
  os << "; subcode: " << subcode_rows << " rows, dimension " << subcode_dim
     << (subcode_mds ? ", MDS" : ", not MDS");
  if (subcode_dim < subcode_rows) os << " (dimension deficiency " << subcode_rows - subcode_dim << ")";
  return os.str();
}

SubcodeReport mds_subcode_report(const Matrix& m1, const Matrix& m2) {
  SubcodeReport r;
  const Matrix full = stack(m1, m2);
  r.code_rows = full.rows();
  r.code_dim = rank(full);
  r.code_verdict = check_mds_generator(full, static_cast<unsigned>(full.rows()));
  r.code_mds = r.code_dim == r.code_rows && r.code_verdict.ok();
  r.subcode_rows = m1.rows();
  r.subcode_dim = rank(m1);
  r.subcode_verdict = check_mds_generator(m1, static_cast<unsigned>(m1.rows()));
  r.subcode_mds = r.subcode_rows > 0 && r.subcode_dim == r.subcode_rows && r.subcode_verdict.ok();
  return r;
}

}  // namespace aoa
