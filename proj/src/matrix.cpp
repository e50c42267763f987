// SPDX-License-Identifier: Apache-2.0
#include "aoa/matrix.hpp"

#include <sstream>

#include "aoa/error.hpp"

namespace aoa {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows_ * cols_, Errc::DimensionMismatch, "matrix data size mismatch");
  for (auto e : data_) field_.check(e);
}

Matrix::Matrix(Field field, const std::vector<std::vector<Element>>& rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, Errc::DimensionMismatch, "ragged matrix literal");
    for (auto e : r) {
      field_.check(e);
      data_.push_back(e);
    }
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Element v) {
  field_.check(v);
  data_[r * cols_ + c] = v;
}

bool Matrix::operator==(const Matrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         data_ == other.data_;
}

Echelon rref(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Element> a = m.data();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t sel = lead;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[lead * cols + j]);
    const Element inv = f.inv(a[lead * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) a[lead * cols + j] = f.mul(a[lead * cols + j], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      const Element factor = a[r * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, a[lead * cols + j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  a.resize(lead * cols);
  return Echelon{Matrix(f, lead, cols, std::move(a)), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix null_space(const Matrix& m) {
  const Field& f = m.field();
  auto e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Element> out;
  std::size_t count = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = f.neg(e.reduced.at(r, free));
    out.insert(out.end(), v.begin(), v.end());
    ++count;
  }
  return Matrix(f, count, cols, std::move(out));
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  require(top.field() == bottom.field(), Errc::DimensionMismatch, "stack over different fields");
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  require(top.cols() == bottom.cols(), Errc::DimensionMismatch, "stack with different widths");
  std::vector<Element> d = top.data();
  d.insert(d.end(), bottom.data().begin(), bottom.data().end());
  return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(d));
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
  std::vector<Element> d;
  d.reserve(m.rows() * cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (auto c : cols) {
      require(c < m.cols(), Errc::DimensionMismatch, "column index out of range");
      d.push_back(m.at(r, c));
    }
  return Matrix(m.field(), m.rows(), cols.size(), std::move(d));
}

Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows) {
  std::vector<Element> d;
  d.reserve(rows.size() * m.cols());
  for (auto r : rows) {
    require(r < m.rows(), Errc::DimensionMismatch, "row index out of range");
    auto row = m.row(r);
    d.insert(d.end(), row.begin(), row.end());
  }
  return Matrix(m.field(), rows.size(), m.cols(), std::move(d));
}

std::vector<Element> combine_rows(const Matrix& m, std::span<const Element> coeffs) {
  require(coeffs.size() == m.rows(), Errc::DimensionMismatch, "coefficient count mismatch");
  const Field& f = m.field();
  std::vector<Element> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (coeffs[r] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(coeffs[r], m.at(r, c)));
  }
  return out;
}

std::optional<std::vector<Element>> solve_left(const Matrix& a, std::span<const Element> b) {
  require(b.size() == a.cols(), Errc::DimensionMismatch, "right-hand side width mismatch");
  const Field& f = a.field();
  // Row-reduce [A^T | b] as the system A^T x = b.
  const std::size_t n = a.rows(), eqs = a.cols();
  Matrix aug(f, eqs, n + 1);
  for (std::size_t i = 0; i < eqs; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, a.at(j, i));
    aug.set(i, n, b[i]);
  }
  auto e = rref(aug);
  std::vector<Element> x(n, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == n) return std::nullopt;
    x[e.pivots[r]] = e.reduced.at(r, n);
  }
  return x;
}

bool row_space_contains(const Matrix& big, const Matrix& small) {
  if (small.rows() == 0) return true;
  return rank(stack(big, small)) == rank(big);
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  return row_space_contains(a, b) && row_space_contains(b, a);
}

Matrix complete_basis(const Matrix& partial, const Matrix& ambient) {
  require(partial.rows() == 0 || partial.cols() == ambient.cols(), Errc::DimensionMismatch,
          "basis completion width mismatch");
  require(row_space_contains(ambient, partial), Errc::DimensionMismatch,
          "partial rows are not inside the ambient row space");
  const std::size_t target = rank(ambient);
  Matrix current = partial;
  std::size_t have = rank(current);
  std::vector<std::size_t> added;
  for (std::size_t r = 0; r < ambient.rows() && have < target; ++r) {
    std::size_t idx[] = {r};
    Matrix trial = stack(current, select_rows(ambient, idx));
    std::size_t k = rank(trial);
    if (k > have) {
      current = std::move(trial);
      have = k;
      added.push_back(r);
    }
  }
  return select_rows(ambient, added);
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
    os << "]\n";
  }
  return os.str();
}

}  // namespace aoa
