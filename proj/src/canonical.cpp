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

#include "zigzag/canonical.hpp"

namespace zigzag {

namespace {

Index floor_div2(Index a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }
Index ceil_div2(Index a) { return -floor_div2(-a); }

}  // namespace

std::optional<Index> IndexMap::original_of(Index canonical) {
  if (canonical % 2 != 0) return std::nullopt;
  return canonical / 2;
}

CanonicalModule canonicalize(const ZigzagModule& v) {
  require_valid(v);
  ZigzagModule c;
  c.field = v.field;
  c.start = IndexMap::canonical_of(v.start);
  c.left_tail = v.left_tail;
  c.right_tail = v.right_tail;
  c.dims.clear();
  for (std::size_t k = 0; k < v.length(); ++k) {
    c.dims.push_back(v.dims[k]);
    if (k + 1 == v.length()) break;
    const auto& e = v.edges[k];
    const bool forward = e.direction == Direction::Forward;
    const std::size_t sink_dim = forward ? v.dims[k + 1] : v.dims[k];
    c.dims.push_back(sink_dim);
    Matrix from_left = forward ? e.matrix : Matrix::identity(sink_dim, v.field);
    Matrix from_right = forward ? Matrix::identity(sink_dim, v.field) : e.matrix;
    c.edges.push_back({Direction::Forward, std::move(from_left)});
    c.edges.push_back({Direction::Backward, std::move(from_right)});
  }
  return {std::move(c), IndexMap{}};
}

Barcode pull_back_barcode(const Barcode& b, const IndexMap&) {
  std::vector<Interval> out;
  out.reserve(b.size());
  for (const auto& iv : b) {
    const Index lo = iv.left_infinite() ? kNegInf : ceil_div2(iv.lo);
    const Index hi = iv.right_infinite() ? kPosInf : floor_div2(iv.hi);
    if (lo > hi) {
      throw InternalError("canonical bar " + to_string(iv) +
                          " lives only on an inserted sink");
    }
    out.emplace_back(lo, hi);
  }
  return Barcode(std::move(out));
}

}  // namespace zigzag
