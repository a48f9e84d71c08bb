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

#include "zigzag/refine.hpp"

#include <algorithm>
#include <string>

#include "zigzag/splitting.hpp"

namespace zigzag {

namespace {

Matrix block(const Matrix& m, std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) {
  Matrix out(nr, nc, m.field());
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = m(r0 + r, c0 + c);
  return out;
}

// A bar together with the coordinate block it came from.
struct Tagged {
  Interval bar;
  Index at = 0;
  bool second = false;  // from the second block
  std::size_t pos = 0;  // position within its block's barcode
};

// Rows of a stacked basis [first-block bars alive at j; second-block bars
// alive at j], each block in its own barcode order, listed in `merged` order
// and shifted by `offset`.
std::vector<std::size_t> merged_rows(const std::vector<Tagged>& merged, Index j,
                                     std::size_t offset, std::size_t first_alive) {
  std::vector<std::size_t> rows;
  for (const auto& t : merged) {
    if (!t.bar.contains(j)) continue;
    std::size_t r = t.second ? first_alive : 0;
    for (const auto& u : merged) {
      r += (u.second == t.second && u.pos < t.pos && u.bar.contains(j)) ? 1 : 0;
    }
    rows.push_back(offset + r);
  }
  return rows;
}

std::vector<std::size_t> iota_rows(std::size_t n) {
  std::vector<std::size_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = i;
  return r;
}

}  // namespace

ModuleStream::ModuleStream(ZigzagModule v) : v_(std::move(v)) {
  require_valid(v_);
  last_ = std::max<Index>({0, -v_.start, v_.end()}) + 1;
}

std::optional<WindowYield> ModuleStream::next() {
  if (k_ > last_) return std::nullopt;
  WindowYield y;
  y.module = restrict(v_, -k_, k_);
  y.last = k_ == last_;
  y.left_tail = v_.left_tail;
  y.right_tail = v_.right_tail;
  ++k_;
  return y;
}

std::optional<WindowYield> ReplayStream::next() {
  if (pos_ >= items_.size()) return std::nullopt;
  return items_[pos_++];
}

RefinementTree refine_step(const RefinementTree& tree, const ZigzagModule& next) {
  require_valid(next);
  const Index k = tree.radius + 1;
  if (next.start != -k || next.end() != k) {
    throw InvalidInput("inconsistent stream: expected window [" + std::to_string(-k) + "," +
                       std::to_string(k) + "]");
  }
  if (!next.finite()) throw InvalidInput("inconsistent stream: windows must have zero tails");
  if (!tree.empty()) {
    if (!(next.field == tree.window.field)) throw InvalidInput("inconsistent stream: modulus changed");
    if (!(restrict(next, -(k - 1), k - 1) == tree.window)) {
      throw InvalidInput("inconsistent stream: window " + std::to_string(k) +
                         " disagrees with the previous yield");
    }
  }
  const PrimeField field = next.field;
  auto at = [k](Index j) { return static_cast<std::size_t>(j + k); };

  std::vector<Matrix> theta;
  for (Index j = -k; j <= k; ++j) {
    const bool inner = !tree.empty() && j > -k && j < k;
    theta.push_back(inner ? tree.theta[static_cast<std::size_t>(j + k - 1)]
                          : Matrix::identity(next.dims[at(j)], field));
  }

  // The remainder R on the new window, read off the block form of V.
  const ZigzagModule c = conjugate(next, theta);
  const ZigzagModule f_form = normal_form_module(tree.finalized, -k, k, field, next.directions(),
                                                 Tail::Zero, Tail::Zero);
  ZigzagModule r = next;
  for (Index j = -k; j <= k; ++j) r.dims[at(j)] = next.dims[at(j)] - f_form.dims[at(j)];
  for (std::size_t e = 0; e < next.edges.size(); ++e) {
    const Matrix& m = c.edges[e].matrix;
    const bool fwd = c.edges[e].direction == Direction::Forward;
    const std::size_t src = fwd ? e : e + 1;
    const std::size_t dst = fwd ? e + 1 : e;
    const std::size_t rs = r.dims[src];
    const std::size_t rd = r.dims[dst];
    if (!block(m, rd, m.rows() - rd, 0, rs).is_zero() ||
        !block(m, 0, rd, rs, m.cols() - rs).is_zero() ||
        !(block(m, rd, m.rows() - rd, rs, m.cols() - rs) == f_form.edges[e].matrix)) {
      throw InternalError("finalized bar contradicted at edge " +
                          std::to_string(-k + static_cast<Index>(e)));
    }
    r.edges[e].matrix = block(m, 0, rd, 0, rs);
  }

  const SplitResult split = split_all_interior(r, -k, k);

  std::vector<Tagged> merged;
  for (std::size_t n = 0; n < tree.finalized.size(); ++n) {
    merged.push_back({tree.finalized.bars()[n], tree.finalized_at[n], true, n});
  }
  for (std::size_t n = 0; n < split.bars.size(); ++n) {
    merged.push_back({split.bars.bars()[n], k, false, n});
  }
  // Older copies of a repeated bar keep their places.
  std::stable_sort(merged.begin(), merged.end(), [](const Tagged& a, const Tagged& b) {
    return a.bar != b.bar ? a.bar < b.bar : a.at < b.at;
  });

  RefinementTree out;
  out.radius = k;
  out.window = next;
  out.remainder = split.remainder;
  for (Index j = -k; j <= k; ++j) {
    const std::size_t kept = split.remainder.dims[at(j)];
    const std::size_t fresh = split.bars.count_containing(j);
    // Rows of blockdiag(psi, I) are [kept; new bars; old finalized].
    auto rows = iota_rows(kept);
    const auto f_rows = merged_rows(merged, j, kept, fresh);
    rows.insert(rows.end(), f_rows.begin(), f_rows.end());
    const Matrix stacked = block_diagonal(split.splitting[at(j)],
                                          Matrix::identity(f_form.dims[at(j)], field));
    out.theta.push_back(stacked.select_rows(rows) * theta[at(j)]);
  }
  std::vector<Interval> pending;
  for (const auto& iv : split.window_certificate.barcode) {
    if (!(-k < iv.lo && iv.hi < k)) pending.push_back(iv);
  }
  out.pending = Barcode(std::move(pending));
  std::vector<Interval> fin;
  for (const auto& t : merged) {
    fin.push_back(t.bar);
    out.finalized_at.push_back(t.at);
  }
  out.finalized = Barcode(std::move(fin));
  return out;
}

std::vector<RefinementNode> RefinementTree::nodes() const {
  std::vector<RefinementNode> out;
  if (empty()) return out;
  const Index k = radius;
  const PrimeField field = window.field;
  std::vector<Matrix> inv;
  for (const auto& t : theta) inv.push_back(inverse(t));

  auto tuple = [&](const Barcode& b, std::size_t which, bool fin) {
    std::vector<Subspace> subs;
    for (Index j = -k; j <= k; ++j) {
      const auto jj = static_cast<std::size_t>(j + k);
      const Interval& bar = b.bars()[which];
      if (!bar.contains(j)) {
        subs.push_back(Subspace::zero(window.dims[jj], field));
        continue;
      }
      std::size_t coord = fin ? remainder.dims[jj] : 0;
      for (std::size_t n = 0; n < which; ++n) coord += b.bars()[n].contains(j) ? 1 : 0;
      subs.push_back(Subspace(inv[jj].cols_range(coord, 1)));
    }
    return subs;
  };

  for (std::size_t p = 0; p < pending.size(); ++p) {
    RefinementNode n;
    n.path = {static_cast<std::size_t>(k), p};
    n.bar = pending.bars()[p];
    n.subspaces = tuple(pending, p, false);
    out.push_back(std::move(n));
  }
  for (std::size_t f = 0; f < finalized.size(); ++f) {
    RefinementNode n;
    std::size_t rank_then = 0;
    for (std::size_t g = 0; g < f; ++g) rank_then += finalized_at[g] == finalized_at[f] ? 1 : 0;
    n.path = {static_cast<std::size_t>(finalized_at[f]), rank_then};
    n.bar = finalized.bars()[f];
    n.finalized = true;
    n.finalized_at = finalized_at[f];
    n.subspaces = tuple(finalized, f, true);
    out.push_back(std::move(n));
  }
  return out;
}

Decomposition resolve_tree(const RefinementTree& tree, Tail left, Tail right) {
  if (tree.empty()) throw InvalidInput("resolve_tree: nothing streamed yet");
  const Index k = tree.radius;
  const PrimeField field = tree.window.field;
  ZigzagModule r = tree.remainder;
  r.left_tail = left;
  r.right_tail = right;
  ZigzagModule w = tree.window;
  w.left_tail = left;
  w.right_tail = right;
  const Decomposition dr = decompose_tailed(r);

  std::vector<Tagged> merged;
  for (std::size_t n = 0; n < dr.barcode.size(); ++n) merged.push_back({dr.barcode.bars()[n], k, false, n});
  for (std::size_t n = 0; n < tree.finalized.size(); ++n) {
    merged.push_back({tree.finalized.bars()[n], tree.finalized_at[n], true, n});
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Tagged& a, const Tagged& b) { return a.bar < b.bar; });

  Decomposition d;
  std::vector<Interval> all;
  for (const auto& t : merged) all.push_back(t.bar);
  d.barcode = Barcode(std::move(all));
  for (Index j = -k; j <= k; ++j) {
    const auto jj = static_cast<std::size_t>(j + k);
    const std::size_t fdim = tree.window.dims[jj] - r.dims[jj];
    const auto rows = merged_rows(merged, j, 0, r.dims[jj]);
    const Matrix stacked = block_diagonal(dr.basis[jj], Matrix::identity(fdim, field));
    d.basis.push_back(stacked.select_rows(rows) * tree.theta[jj]);
  }
  d.normal_form = normal_form_module(d.barcode, -k, k, field, w.directions(), left, right);
  if (auto rep = verify_decomposition(w, d); !rep.ok()) {
    throw InternalError("streamed decomposition failed its certificate: " + rep.message);
  }
  return d;
}

std::vector<StreamReport> stream_decompose(WindowStream& src, const StreamOptions& options) {
  RefinementTree tree;
  std::vector<StreamReport> reports;
  auto emit = [&](StreamReport r) {
    reports.push_back(r);
    if (options.observer) options.observer(tree, reports.back());
  };
  for (;;) {
    if (options.window_limit && tree.radius >= *options.window_limit) break;
    auto item = src.next();
    if (!item) break;
    RefinementTree next = refine_step(tree, item->module);
    if (!tree.finalized.subset_of(next.finalized)) {
      throw InternalError("a finalized bar disappeared at radius " + std::to_string(next.radius));
    }
    tree = std::move(next);
    emit({tree.radius, tree.finalized, tree.pending, false, {}});
    if (item->last) {
      const Decomposition d = resolve_tree(tree, item->left_tail, item->right_tail);
      if (!tree.finalized.subset_of(d.barcode)) {
        throw InternalError("resolution lost a finalized bar");
      }
      emit({tree.radius, d.barcode, {}, true, d.barcode});
      break;
    }
  }
  return reports;
}

}  // namespace zigzag
