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

#include "zigzag/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace zigzag {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field())) {
    throw InvalidInput(std::string(what) + ": modulus mismatch (" +
                       std::to_string(a.modulus()) + " vs " +
                       std::to_string(b.modulus()) + ")");
  }
}

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field,
               std::span<const std::int64_t> entries)
    : Matrix(rows, cols, field) {
  if (entries.size() != rows * cols) {
    throw InvalidInput("matrix " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " needs " +
                       std::to_string(rows * cols) + " entries, got " +
                       std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    data_[i] = field_.reduce(entries[i]);
  }
}

Matrix Matrix::identity(std::size_t n, PrimeField field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                         PrimeField field, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::column(std::span<const Scalar> v, PrimeField field) {
  Matrix m(v.size(), 1, field);
  for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r] % field.modulus();
  return m;
}

std::vector<Scalar> Matrix::col(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_col(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_) throw InvalidInput("set_col: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(*this, rhs, "multiply");
  if (cols_ != rhs.rows_) {
    throw InvalidInput("multiply: " + shape(*this) + " * " + shape(rhs));
  }
  Matrix out(rows_, rhs.cols_, field_);
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k);
      if (a == 0) continue;
      const Scalar* brow = rhs.data_.data() + k * rhs.cols_;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        acc[c] = (acc[c] + a * brow[c]) % p;
      }
    }
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      out(r, c) = static_cast<Scalar>(acc[c]);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(*this, rhs, "add");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw InvalidInput("add: " + shape(*this) + " + " + shape(rhs));
  }
  Matrix out(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_field(*this, rhs, "subtract");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw InvalidInput("subtract: " + shape(*this) + " - " + shape(rhs));
  }
  Matrix out(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  }
  return out;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) {
    throw InvalidInput("apply: " + shape(*this) + " on vector of length " +
                       std::to_string(v.size()));
  }
  std::vector<Scalar> out(rows_, 0);
  const std::uint64_t p = field_.modulus();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * v[c]) % p;
    }
    out[r] = static_cast<Scalar>(acc);
  }
  return out;
}

Matrix Matrix::cols_range(std::size_t first, std::size_t count) const {
  Matrix out(rows_, count, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> which) const {
  Matrix out(rows_, which.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < which.size(); ++c)
      out(r, c) = (*this)(r, which[c]);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> which) const {
  Matrix out(which.size(), cols_, field_);
  for (std::size_t r = 0; r < which.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(which[r], c);
  return out;
}

bool Matrix::is_zero() const {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << "] (" << m.rows() << "x" << m.cols() << " mod " << m.modulus()
            << ")";
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hconcat");
  if (a.rows() != b.rows()) throw InvalidInput("hconcat: row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vconcat");
  if (a.cols() != b.cols()) throw InvalidInput("vconcat: column mismatch");
  Matrix out(a.rows() + b.rows(), a.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "block_diagonal");
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

RrefResult rref(const Matrix& m, const PrimeField& field) {
  if (!(m.field() == field)) {
    throw InvalidInput("rref: matrix is over F_" + std::to_string(m.modulus()) +
                       ", context is F_" + std::to_string(field.modulus()));
  }
  Matrix a = m;
  Matrix t = Matrix::identity(m.rows(), field);
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t pr = lead;
    while (pr < a.rows() && a(pr, c) == 0) ++pr;
    if (pr == a.rows()) continue;
    if (pr != lead) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(pr, k), a(lead, k));
      for (std::size_t k = 0; k < t.cols(); ++k) std::swap(t(pr, k), t(lead, k));
    }
    const Scalar s = field.inv(a(lead, c));
    for (std::size_t k = 0; k < a.cols(); ++k) a(lead, k) = field.mul(a(lead, k), s);
    for (std::size_t k = 0; k < t.cols(); ++k) t(lead, k) = field.mul(t(lead, k), s);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Scalar f = a(r, c);
      for (std::size_t k = 0; k < a.cols(); ++k)
        a(r, k) = field.sub(a(r, k), field.mul(f, a(lead, k)));
      for (std::size_t k = 0; k < t.cols(); ++k)
        t(r, k) = field.sub(t(r, k), field.mul(f, t(lead, k)));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(a), std::move(pivots), std::move(t)};
}

RrefResult rref(const Matrix& m) { return rref(m, m.field()); }

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse: " + shape(m) + " is not square");
  auto r = rref(m);
  if (r.pivots.size() != m.rows()) throw InvalidInput("inverse: matrix is singular");
  return r.transform;
}

Matrix kernel_basis(const Matrix& m) {
  const auto r = rref(m);
  const auto& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Matrix k(m.cols(), m.cols() - r.pivots.size(), field);
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(free, out) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      k(r.pivots[i], out) = field.neg(r.reduced(i, free));
    }
    ++out;
  }
  return k;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m,
                                         std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw InvalidInput("solve: length mismatch");
  const auto& field = m.field();
  const auto r = rref(m);
  const auto tb = r.transform.apply(b);
  for (std::size_t i = r.pivots.size(); i < tb.size(); ++i) {
    if (tb[i] != 0) return std::nullopt;
  }
  std::vector<Scalar> x(m.cols(), 0);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = tb[i] % field.modulus();
  return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  require_same_field(m, b, "solve");
  if (b.rows() != m.rows()) throw InvalidInput("solve: row mismatch");
  const auto r = rref(m);
  const Matrix tb = r.transform * b;
  Matrix x(m.cols(), b.cols(), m.field());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = r.pivots.size(); i < tb.rows(); ++i) {
      if (tb(i, c) != 0) return std::nullopt;
    }
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x(r.pivots[i], c) = tb(i, c);
  }
  return x;
}

}  // namespace zigzag
