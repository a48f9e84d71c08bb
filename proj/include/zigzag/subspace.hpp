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

#ifndef ZIGZAG_SUBSPACE_HPP
#define ZIGZAG_SUBSPACE_HPP

#include "zigzag/matrix.hpp"

namespace zigzag {

/// A subspace of F_p^n, held as a matrix of linearly independent columns.
class Subspace {
 public:
  Subspace() = default;
  /// Takes ownership of `basis`; throws InvalidInput if the columns are
  /// dependent.
  explicit Subspace(Matrix basis);

  static Subspace zero(std::size_t ambient_dim, PrimeField field);
  static Subspace full(std::size_t ambient_dim, PrimeField field);
  /// Span of arbitrary generators: keeps the pivot columns of rref.
  static Subspace span(const Matrix& generators);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const PrimeField& field() const { return basis_.field(); }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

 private:
  Matrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// map(s), as a subspace of the codomain.
Subspace image(const Matrix& map, const Subspace& s);
Subspace image(const Matrix& map);
Subspace kernel(const Matrix& map);
/// { v : map * v in target }. Throws InvalidInput on a shape mismatch.
Subspace preimage_subspace(const Matrix& map, const Subspace& target);
/// Deterministic internal complement: the standard basis vectors at the
/// non-pivot columns of rref(basis^T).
Subspace complement(const Subspace& s);
/// C with inner + C == outer and inner & C == 0; inner must lie in outer.
/// Greedily keeps the columns of outer's basis that are new.
Subspace relative_complement(const Subspace& inner, const Subspace& outer);
/// a & b == 0 and a + b == everything.
bool is_internal_direct_sum(const Subspace& a, const Subspace& b);

}  // namespace zigzag

#endif  // ZIGZAG_SUBSPACE_HPP
