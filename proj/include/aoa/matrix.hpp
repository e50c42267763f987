// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aoa/finite_field.hpp"

namespace aoa {

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> data);
  /// Convenience for literals in tests: one inner vector per row.
  Matrix(Field field, const std::vector<std::vector<Element>>& rows);

  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element v);
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Element>& data() const noexcept { return data_; }

  bool operator==(const Matrix& other) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each reduced row
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Rows form a basis of {x : M x^T = 0}, i.e. a generator of the dual code.
/// Result is (cols - rank) x cols.
Matrix null_space(const Matrix& m);

Matrix stack(const Matrix& top, const Matrix& bottom);
Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols);
Matrix select_rows(const Matrix& m, std::span<const std::size_t> rows);

/// coeffs . M (a linear combination of the rows of M).
std::vector<Element> combine_rows(const Matrix& m, std::span<const Element> coeffs);

/// Coefficients x with x . A = b when b lies in the row space of A.
std::optional<std::vector<Element>> solve_left(const Matrix& a, std::span<const Element> b);

bool row_space_contains(const Matrix& big, const Matrix& small);
bool same_row_space(const Matrix& a, const Matrix& b);

/// Rows of `ambient` (scanned in order) appended greedily to `partial` until the
/// row space of `ambient` is spanned. Returns only the added rows. `partial`
/// must lie inside the row space of `ambient`.
Matrix complete_basis(const Matrix& partial, const Matrix& ambient);

std::string to_string(const Matrix& m);

}  // namespace aoa
