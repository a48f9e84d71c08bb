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

#include "zigzag/subspace.hpp"

#include <string>

namespace zigzag {

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  if (rank(basis_) != basis_.cols()) {
    throw InvalidInput("subspace basis has dependent columns");
  }
}

Subspace Subspace::zero(std::size_t ambient_dim, PrimeField field) {
  Subspace s;
  s.basis_ = Matrix(ambient_dim, 0, field);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim, PrimeField field) {
  Subspace s;
  s.basis_ = Matrix::identity(ambient_dim, field);
  return s;
}

Subspace Subspace::span(const Matrix& generators) {
  Subspace s;
  s.basis_ = generators.select_cols(rref(generators).pivots);
  return s;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  return solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  return rank(hconcat(basis_, other.basis_)) == dim();
}

bool Subspace::operator==(const Subspace& other) const {
  return other.dim() == dim() && contains(other);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InvalidInput("sum: ambient mismatch");
  return Subspace::span(hconcat(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InvalidInput("intersect: ambient mismatch");
  }
  // coordinates x with a*x in b
  const Subspace coords = preimage_subspace(a.basis(), b);
  return Subspace::span(a.basis() * coords.basis());
}

Subspace image(const Matrix& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim()) {
    throw InvalidInput("image: map has " + std::to_string(map.cols()) +
                       " columns, subspace lives in dimension " +
                       std::to_string(s.ambient_dim()));
  }
  return Subspace::span(map * s.basis());
}

Subspace image(const Matrix& map) { return Subspace::span(map); }

Subspace kernel(const Matrix& map) { return Subspace(kernel_basis(map)); }

Subspace preimage_subspace(const Matrix& map, const Subspace& target) {
  if (map.rows() != target.ambient_dim()) {
    throw InvalidInput("preimage: map has " + std::to_string(map.rows()) +
                       " rows, target lives in dimension " +
                       std::to_string(target.ambient_dim()));
  }
  // map*v == target*c  <=>  [map | -target] (v; c) == 0.
  const Matrix neg_t =
      Matrix::zero(target.ambient_dim(), target.dim(), target.field()) -
      target.basis();
  const Matrix k = kernel_basis(hconcat(map, neg_t));
  std::vector<std::size_t> top(map.cols());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
  return Subspace::span(k.select_rows(top));
}

Subspace complement(const Subspace& s) {
  const auto r = rref(s.basis().transpose());
  std::vector<bool> is_pivot(s.ambient_dim(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Matrix c(s.ambient_dim(), s.ambient_dim() - r.pivots.size(), s.field());
  std::size_t out = 0;
  for (std::size_t i = 0; i < s.ambient_dim(); ++i) {
    if (!is_pivot[i]) c(i, out++) = 1;
  }
  return Subspace(std::move(c));
}

Subspace relative_complement(const Subspace& inner, const Subspace& outer) {
  if (!outer.contains(inner)) {
    throw InvalidInput("relative_complement: inner is not contained in outer");
  }
  // Pivot columns of [inner | outer] past inner's block are the new ones.
  const Matrix both = hconcat(inner.basis(), outer.basis());
  std::vector<std::size_t> picked;
  for (auto c : rref(both).pivots) {
    if (c >= inner.dim()) picked.push_back(c - inner.dim());
  }
  return Subspace(outer.basis().select_cols(picked));
}

bool is_internal_direct_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  if (a.dim() + b.dim() != a.ambient_dim()) return false;
  return rank(hconcat(a.basis(), b.basis())) == a.ambient_dim();
}

}  // namespace zigzag
