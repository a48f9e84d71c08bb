/*
 * Copyright 2026 The zigzag-intervals Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ZIGZAG_MATRIX_HPP
#define ZIGZAG_MATRIX_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "zigzag/field.hpp"

namespace zigzag {

/// Dense row-major matrix over F_p. Zero-row and zero-column matrices are
/// valid and stand for maps to or from the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, PrimeField field);
  /// Entries are reduced mod p; `entries` is row-major with rows*cols items.
  Matrix(std::size_t rows, std::size_t cols, PrimeField field,
         std::span<const std::int64_t> entries);

  static Matrix identity(std::size_t n, PrimeField field);
  static Matrix zero(std::size_t rows, std::size_t cols, PrimeField field) {
    return Matrix(rows, cols, field);
  }
  /// Convenience for tests and literals: rows of small integers.
  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                          PrimeField field, std::size_t cols_if_empty = 0);
  static Matrix column(std::span<const Scalar> v, PrimeField field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }
  std::uint32_t modulus() const { return field_.modulus(); }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t v) {
    (*this)(r, c) = field_.reduce(v);
  }
  const std::vector<Scalar>& data() const { return data_; }

  std::vector<Scalar> col(std::size_t c) const;
  void set_col(std::size_t c, std::span<const Scalar> v);
  std::vector<Scalar> row(std::size_t r) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  /// Columns [first, first + count).
  Matrix cols_range(std::size_t first, std::size_t count) const;
  Matrix select_cols(std::span<const std::size_t> which) const;
  Matrix select_rows(std::span<const std::size_t> which) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_{};
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  Matrix transform;  // invertible, transform * input == reduced
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Throws InvalidInput
/// when `m` is not over `field`.
RrefResult rref(const Matrix& m, const PrimeField& field);
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Throws InvalidInput for non-square or singular input.
Matrix inverse(const Matrix& m);
/// Columns form a basis of the null space, one per free column of rref(m),
/// in increasing free-column order.
Matrix kernel_basis(const Matrix& m);
/// Some x with m * x == b, or nullopt when b is outside the column space.
std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         std::span<const Scalar> b);
/// Solves m * X == B column by column; nullopt if any column is unsolvable.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

}  // namespace zigzag

#endif  // ZIGZAG_MATRIX_HPP
