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

#include "zigzag/splitting.hpp"

#include <algorithm>

namespace zigzag {

namespace {

Matrix block(const Matrix& m, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
  Matrix out(nr, nc, m.field());
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = m(r0 + r, c0 + c);
  return out;
}

// Splits off the bars of d (a decomposition of v|[s, t]) flagged in `take`.
SplitResult split_selected(const ZigzagModule& v, Index s, Index t, Decomposition d,
                           const std::vector<bool>& take) {
  const auto& bars = d.barcode.bars();
  std::vector<Interval> taken;
  for (std::size_t b = 0; b < bars.size(); ++b)
    if (take[b]) taken.push_back(bars[b]);

  std::vector<Matrix> psi;
  psi.reserve(v.length());
  std::vector<std::size_t> kept_dim(v.length());
  for (Index j = v.start; j <= v.end(); ++j) {
    const auto k = static_cast<std::size_t>(j - v.start);
    if (j < s || j > t) {
      psi.push_back(Matrix::identity(v.dims[k], v.field));
      kept_dim[k] = v.dims[k];
      continue;
    }
    // Normal-form coordinates at j follow the bars alive there in order.
    std::vector<std::size_t> kept, split;
    std::size_t pos = 0;
    for (std::size_t b = 0; b < bars.size(); ++b) {
      if (!bars[b].contains(j)) continue;
      (take[b] ? split : kept).push_back(pos++);
    }
    kept_dim[k] = kept.size();
    kept.insert(kept.end(), split.begin(), split.end());
    psi.push_back(d.basis[static_cast<std::size_t>(j - s)].select_rows(kept));
  }

  const ZigzagModule c = conjugate(v, psi);
  ZigzagModule u = v;
  for (std::size_t k = 0; k < v.length(); ++k) u.dims[k] = kept_dim[k];
  for (std::size_t k = 0; k < v.edges.size(); ++k) {
    const Matrix& m = c.edges[k].matrix;
    const bool fwd = c.edges[k].direction == Direction::Forward;
    const std::size_t src = fwd ? k : k + 1;
    const std::size_t dst = fwd ? k + 1 : k;
    const std::size_t ks = kept_dim[src];
    const std::size_t kd = kept_dim[dst];
    if (!block(m, kd, m.rows() - kd, 0, ks).is_zero() ||
        !block(m, 0, kd, ks, m.cols() - ks).is_zero()) {
      throw InternalError("split: conjugated edge " + std::to_string(v.start + static_cast<Index>(k)) +
                          " is not block diagonal");
    }
    u.edges[k].matrix = block(m, 0, kd, 0, ks);
  }

  SplitResult r;
  r.remainder = std::move(u);
  r.bars = Barcode(std::move(taken));
  r.window_certificate = std::move(d);
  r.splitting = std::move(psi);
  return r;
}

void require_inside(const ZigzagModule& v, Index s, Index t) {
  if (s > t || s < v.start || t > v.end()) {
    throw InvalidInput("split window [" + std::to_string(s) + "," + std::to_string(t) +
                       "] is not inside the stored window");
  }
}

bool injective(const Matrix& m) { return rank(m) == m.cols(); }
bool surjective(const Matrix& m) { return rank(m) == m.rows(); }

}  // namespace

SplitPair propagate_splitting(const Matrix& g, const Matrix& f, const Subspace& u_prev,
                              const Subspace& w_prev) {
  if (g.cols() != f.cols()) throw InvalidInput("propagate_splitting: g and f have different domains");
  if (u_prev.ambient_dim() != g.rows() || w_prev.ambient_dim() != g.rows()) {
    throw InvalidInput("propagate_splitting: splitting lives in the wrong space");
  }
  if (!surjective(g)) throw InvalidInput("propagate_splitting: g is not surjective");
  if (!injective(f)) throw InvalidInput("propagate_splitting: f is not injective");
  if (!is_internal_direct_sum(u_prev, w_prev)) {
    throw InvalidInput("propagate_splitting: U_prev and W_prev are not complementary");
  }
  SplitPair p;
  p.u = preimage_subspace(g, u_prev);
  p.w = relative_complement(kernel(g), preimage_subspace(g, w_prev));
  p.u_next = image(f, p.u);
  p.w_next = sum(image(f, p.w), complement(image(f)));
  return p;
}

SplitResult split_interior_interval(const ZigzagModule& v, Index s, Index t, Interval bar) {
  require_valid(v);
  if (!(s < bar.lo && bar.hi < t)) {
    throw InvalidInput("interval " + to_string(bar) + " touches boundary of [" +
                       std::to_string(s) + "," + std::to_string(t) + "]");
  }
  require_inside(v, s, t);
  Decomposition d = decompose_finite(restrict(v, s, t));
  const auto& bars = d.barcode.bars();
  std::vector<bool> take(bars.size(), false);
  const auto it = std::find(bars.begin(), bars.end(), bar);
  if (it == bars.end()) {
    throw InvalidInput("interval " + to_string(bar) + " not found in the restriction's barcode");
  }
  take[static_cast<std::size_t>(it - bars.begin())] = true;
  return split_selected(v, s, t, std::move(d), take);
}

SplitResult split_all_interior(const ZigzagModule& v, Index s, Index t) {
  require_valid(v);
  require_inside(v, s, t);
  Decomposition d = decompose_finite(restrict(v, s, t));
  std::vector<bool> take;
  for (const auto& iv : d.barcode) take.push_back(s < iv.lo && iv.hi < t);
  return split_selected(v, s, t, std::move(d), take);
}

CheckResult verify_splitting(const ZigzagModule& v, const SplitResult& r) {
  if (auto c = validate(r.remainder); !c) return {"remainder: " + c.error};
  const ZigzagModule& u = r.remainder;
  if (u.start != v.start || u.length() != v.length() || u.directions() != v.directions() ||
      u.left_tail != v.left_tail || u.right_tail != v.right_tail) {
    return {"remainder has a different window, orientation or tails"};
  }
  ZigzagModule bars = normal_form_module(r.bars, v.start, v.end(), v.field, v.directions(),
                                         Tail::Zero, Tail::Zero);
  bars.left_tail = u.left_tail;
  bars.right_tail = u.right_tail;
  for (const auto& iv : r.bars) {
    if (iv.contains(v.start) || iv.contains(v.end()) || !iv.finite()) {
      return {"split bar " + to_string(iv) + " reaches the window boundary"};
    }
  }
  const ZigzagModule sum_module = direct_sum(u, bars);
  if (r.splitting.size() != v.length()) return {"wrong number of splitting maps"};
  for (std::size_t k = 0; k < v.length(); ++k) {
    const Matrix& p = r.splitting[k];
    if (p.rows() != v.dims[k] || p.cols() != v.dims[k] || sum_module.dims[k] != v.dims[k] ||
        !is_invertible(p)) {
      return {"splitting map at index " + std::to_string(v.start + static_cast<Index>(k)) +
              " is not an isomorphism"};
    }
  }
  for (std::size_t k = 0; k < v.edges.size(); ++k) {
    const Matrix& m = v.edges[k].matrix;
    const Matrix& n = sum_module.edges[k].matrix;
    const bool ok = v.edges[k].direction == Direction::Forward
                        ? r.splitting[k + 1] * m == n * r.splitting[k]
                        : r.splitting[k] * m == n * r.splitting[k + 1];
    if (!ok) {
      return {"splitting square does not commute at edge " +
              std::to_string(v.start + static_cast<Index>(k))};
    }
  }
  return {};
}

Matrix forward_map_at(const ZigzagModule& v, Index even_i) {
  return restrict(v, even_i, even_i + 1).edges.front().matrix;
}

Matrix backward_map_at(const ZigzagModule& v, Index even_i) {
  return restrict(v, even_i - 1, even_i).edges.front().matrix;
}

StabilizationBounds stabilization_bounds(const ZigzagModule& v) {
  require_valid(v);
  if (!is_canonical_shape(v)) {
    throw InvalidInput("stabilization_bounds needs sources at even and sinks at odd indices");
  }
  auto even_at_most = [](Index x) { return x % 2 == 0 ? x : x - 1; };
  // Past start-2 and end+2 every map is an identity or between zero spaces.
  Index t = 0;
  for (Index i = std::max<Index>(0, even_at_most(v.end() + 2)); i >= 0; i -= 2) {
    if (!injective(forward_map_at(v, i)) || !surjective(backward_map_at(v, i))) {
      t = i + 2;
      break;
    }
  }
  Index s = 0;
  for (Index i = std::min<Index>(0, even_at_most(v.start - 1)); i <= 0; i += 2) {
    if (!surjective(forward_map_at(v, i)) || !injective(backward_map_at(v, i))) {
      s = i - 2;
      break;
    }
  }
  return {s, t};
}

}  // namespace zigzag
