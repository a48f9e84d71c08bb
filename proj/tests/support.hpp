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

#ifndef ZIGZAG_TESTS_SUPPORT_HPP
#define ZIGZAG_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "zigzag/decompose.hpp"
#include "zigzag/subspace.hpp"

namespace zztest {

using namespace zigzag;

inline Matrix M(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p = 2,
                std::size_t cols_if_empty = 0) {
  return Matrix::from_rows(rows, PrimeField(p), cols_if_empty);
}

inline Subspace span_of(const std::vector<std::vector<std::int64_t>>& vectors, std::size_t n,
                        std::uint32_t p = 2) {
  Matrix g(n, vectors.size(), PrimeField(p));
  for (std::size_t c = 0; c < vectors.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) g.set(r, c, vectors[c][r]);
  return Subspace::span(g);
}

/// Every vector of F_p^n, for brute-force oracles at tiny sizes.
inline std::vector<std::vector<Scalar>> all_vectors(std::size_t n, std::uint32_t p) {
  std::vector<std::vector<Scalar>> out{{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& v : out)
      for (Scalar a = 0; a < p; ++a) {
        auto w = v;
        w.push_back(a);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

/// Number of distinct vectors in the column span, by enumeration.
inline std::size_t span_size(const Matrix& m) {
  const std::uint32_t p = m.modulus();
  std::vector<std::vector<Scalar>> seen;
  for (const auto& coeffs : all_vectors(m.cols(), p)) {
    auto v = m.apply(coeffs);
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == v;
    if (!dup) seen.push_back(std::move(v));
  }
  return seen.size();
}

/// Rank by counting the span: |span| = p^rank.
inline std::size_t brute_rank(const Matrix& m) {
  std::size_t size = span_size(m);
  std::size_t r = 0;
  while (size > 1) {
    size /= m.modulus();
    ++r;
  }
  return r;
}

/// Membership by enumerating combinations of the basis.
inline bool brute_contains(const Subspace& s, const std::vector<Scalar>& v) {
  for (const auto& coeffs : all_vectors(s.dim(), s.field().modulus())) {
    if (s.basis().apply(coeffs) == v) return true;
  }
  return false;
}

inline ZigzagModule module(std::uint32_t p, Index start, std::vector<std::size_t> dims,
                           std::vector<EdgeMap> edges, Tail left = Tail::Zero,
                           Tail right = Tail::Zero) {
  ZigzagModule m;
  m.field = PrimeField(p);
  m.start = start;
  m.dims = std::move(dims);
  m.edges = std::move(edges);
  m.left_tail = left;
  m.right_tail = right;
  return m;
}

inline EdgeMap fwd(Matrix m) { return {Direction::Forward, std::move(m)}; }
inline EdgeMap bwd(Matrix m) { return {Direction::Backward, std::move(m)}; }

inline Barcode bars(std::vector<Interval> v) { return Barcode(std::move(v)); }

/// The two-bar block module: dims (1,2,1), f_0 = (1,0)^T, g_2 = (0,1)^T.
inline ZigzagModule block_module() {
  return module(2, 0, {1, 2, 1}, {fwd(M({{1}, {0}})), bwd(M({{0}, {1}}))});
}

}  // namespace zztest

#endif  // ZIGZAG_TESTS_SUPPORT_HPP
