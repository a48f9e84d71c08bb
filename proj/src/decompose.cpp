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

#include "zigzag/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "zigzag/subspace.hpp"

namespace zigzag {

namespace {

// A bar under construction. vectors[j - birth] is its basis vector at j.
struct Bar {
  Index birth = 0;
  bool backward_born = false;
  Index death = kPosInf;
  std::vector<std::vector<Scalar>> vectors;

  std::vector<Scalar>& at(Index j) { return vectors[static_cast<std::size_t>(j - birth)]; }
  const std::vector<Scalar>& at(Index j) const {
    return vectors[static_cast<std::size_t>(j - birth)];
  }
};

std::size_t last_nonzero(const std::vector<Scalar>& w) {
  for (std::size_t r = w.size(); r-- > 0;)
    if (w[r] != 0) return r;
  return w.size();
}

std::size_t first_nonzero(const Matrix& m, std::size_t row) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (m(row, c) != 0) return c;
  return m.cols();
}

Matrix columns_matrix(const std::vector<std::vector<Scalar>>& cols, std::size_t rows,
                      PrimeField field) {
  Matrix m(rows, cols.size(), field);
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

// Left-to-right sweep keeping an interval decomposition of v|[start, frontier].
//
// Bars alive at the frontier all have supports [birth, frontier]. A basis
// change "v_k += c v_l" on the shared support is a morphism of truncated
// interval modules exactly when l may be absorbed into k:
//   birth_l > birth_k: l backward-born (its birth edge points away from it);
//   birth_l < birth_k: k forward-born;
//   equal births: always.
// Sorting backward-born bars by decreasing birth, then forward-born bars by
// increasing birth, every bar may absorb every bar before it.
class Sweep {
 public:
  Sweep(const ZigzagModule& v, BasisChoice* choice) : v_(v), field_(v.field), choice_(choice) {}

  void run() {
    open_initial();
    for (Index i = v_.start; i < v_.end(); ++i) {
      const auto& e = v_.edge(i);
      if (e.direction == Direction::Forward) {
        forward_edge(i, e.matrix);
      } else {
        backward_edge(i, e.matrix);
      }
    }
    for (auto k : alive_) bars_[k].death = v_.end();
    alive_.clear();
  }

  const std::vector<Bar>& bars() const { return bars_; }

 private:
  Matrix choose(Matrix fresh, const Matrix& slack, bool mixable) {
    if (choice_ == nullptr || fresh.cols() == 0) return fresh;
    Matrix out = choice_->choose(fresh, slack, mixable);
    if (out.rows() != fresh.rows() || out.cols() != fresh.cols()) {
      throw InternalError("basis choice hook changed the shape of its input");
    }
    return out;
  }

  std::size_t open_bar(Index birth, bool backward_born, std::vector<Scalar> vec) {
    Bar b;
    b.birth = birth;
    b.backward_born = backward_born;
    b.vectors.push_back(std::move(vec));
    bars_.push_back(std::move(b));
    return bars_.size() - 1;
  }

  void open_initial() {
    const std::size_t n = v_.dims.front();
    const Matrix basis =
        choose(Matrix::identity(n, field_), Matrix(n, 0, field_), true);
    for (std::size_t c = 0; c < n; ++c) alive_.push_back(open_bar(v_.start, false, basis.col(c)));
  }

  std::vector<std::size_t> absorb_order() const {
    std::vector<std::size_t> order = alive_;
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
      const Bar& x = bars_[a];
      const Bar& y = bars_[b];
      if (x.backward_born != y.backward_born) return x.backward_born;
      if (x.birth != y.birth) return x.backward_born ? x.birth > y.birth : x.birth < y.birth;
      return a < b;
    });
    return order;
  }

  // v_target += c * v_source on the shared support up to the frontier.
  void add_into(std::size_t target, std::size_t source, Scalar c, Index frontier) {
    if (c == 0) return;
    Bar& t = bars_[target];
    const Bar& s = bars_[source];
    for (Index j = std::max(t.birth, s.birth); j <= frontier; ++j) {
      auto& dst = t.at(j);
      const auto& src = s.at(j);
      for (std::size_t r = 0; r < dst.size(); ++r) {
        dst[r] = field_.add(dst[r], field_.mul(c, src[r]));
      }
    }
  }

  void forward_edge(Index i, const Matrix& f) {
    const auto order = absorb_order();
    const std::size_t next_dim = f.rows();
    std::vector<std::vector<Scalar>> images(order.size());
    std::vector<std::ptrdiff_t> owner(next_dim, -1);
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      const std::size_t k = order[idx];
      auto w = f.apply(bars_[k].at(i));
      for (;;) {
        const std::size_t low = last_nonzero(w);
        if (low == w.size()) break;
        if (owner[low] < 0) {
          owner[low] = static_cast<std::ptrdiff_t>(idx);
          break;
        }
        const auto lidx = static_cast<std::size_t>(owner[low]);
        const auto& wl = images[lidx];
        const Scalar c = field_.div(w[low], wl[low]);
        for (std::size_t r = 0; r < w.size(); ++r) w[r] = field_.sub(w[r], field_.mul(c, wl[r]));
        add_into(k, order[lidx], field_.neg(c), i);
      }
      if (last_nonzero(w) == w.size()) bars_[k].death = i;
      images[idx] = std::move(w);
    }

    std::vector<std::size_t> next_alive;
    std::vector<std::vector<Scalar>> image_cols;
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
      const std::size_t k = order[idx];
      if (bars_[k].death != kPosInf) continue;
      image_cols.push_back(images[idx]);
      bars_[k].vectors.push_back(images[idx]);
      next_alive.push_back(k);
    }
    const Matrix image_basis = columns_matrix(image_cols, next_dim, field_);
    const Matrix fresh = choose(complement(Subspace(image_basis)).basis(), image_basis, true);
    for (std::size_t c = 0; c < fresh.cols(); ++c) {
      next_alive.push_back(open_bar(i + 1, false, fresh.col(c)));
    }
    alive_ = std::move(next_alive);
  }

  void backward_edge(Index i, const Matrix& g) {
    const auto order = absorb_order();
    const std::size_t here = g.rows();
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(order.size());
    for (auto k : order) cols.push_back(bars_[k].at(i));
    // Coordinates of im g in the current bar basis; row idx belongs to order[idx].
    Matrix coords = inverse(columns_matrix(cols, here, field_)) * g;
    std::vector<std::ptrdiff_t> owner(coords.cols(), -1);
    for (std::size_t idx = order.size(); idx-- > 0;) {
      const std::size_t l = order[idx];
      for (;;) {
        const std::size_t q = first_nonzero(coords, idx);
        if (q == coords.cols()) {
          bars_[l].death = i;
          break;
        }
        if (owner[q] < 0) {
          owner[q] = static_cast<std::ptrdiff_t>(idx);
          break;
        }
        const auto midx = static_cast<std::size_t>(owner[q]);
        const Scalar c = field_.div(coords(idx, q), coords(midx, q));
        for (std::size_t col = 0; col < coords.cols(); ++col) {
          coords(idx, col) = field_.sub(coords(idx, col), field_.mul(c, coords(midx, col)));
        }
        // row_l -= c row_m  <=>  v_m += c v_l
        add_into(order[midx], l, c, i);
      }
    }

    std::vector<std::size_t> survivors;
    std::vector<std::vector<Scalar>> preimages;
    for (auto k : order) {
      if (bars_[k].death != kPosInf) continue;
      auto x = solve(g, bars_[k].at(i));
      if (!x) throw InternalError("backward edge: surviving bar is not in the image");
      survivors.push_back(k);
      preimages.push_back(std::move(*x));
    }
    const Matrix ker = kernel_basis(g);
    const Matrix lifted = choose(columns_matrix(preimages, g.cols(), field_), ker, false);
    for (std::size_t c = 0; c < survivors.size(); ++c) {
      bars_[survivors[c]].vectors.push_back(lifted.col(c));
    }
    std::vector<std::size_t> next_alive = survivors;
    const Matrix fresh = choose(ker, Matrix(ker.rows(), 0, field_), true);
    for (std::size_t c = 0; c < fresh.cols(); ++c) {
      next_alive.push_back(open_bar(i + 1, true, fresh.col(c)));
    }
    alive_ = std::move(next_alive);
  }

  const ZigzagModule& v_;
  PrimeField field_;
  BasisChoice* choice_;
  std::vector<Bar> bars_;
  std::vector<std::size_t> alive_;
};

Interval extended(const Bar& b, const ZigzagModule& v, bool use_tails) {
  Index lo = b.birth;
  Index hi = b.death;
  if (use_tails && v.left_tail == Tail::Iso && lo == v.start) lo = kNegInf;
  if (use_tails && v.right_tail == Tail::Iso && hi == v.end()) hi = kPosInf;
  return {lo, hi};
}

Decomposition assemble(const ZigzagModule& v, const std::vector<Bar>& bars, bool use_tails) {
  std::vector<Interval> ivs;
  ivs.reserve(bars.size());
  for (const auto& b : bars) ivs.push_back(extended(b, v, use_tails));
  std::vector<std::size_t> order(bars.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ivs[a] < ivs[b]; });

  Decomposition d;
  d.barcode = Barcode(ivs);
  for (Index j = v.start; j <= v.end(); ++j) {
    std::vector<std::vector<Scalar>> cols;
    for (auto k : order) {
      const Bar& b = bars[k];
      if (b.birth <= j && j <= b.death) cols.push_back(b.at(j));
    }
    const std::size_t n = v.dims[static_cast<std::size_t>(j - v.start)];
    if (cols.size() != n) throw InternalError("sweep lost track of a basis vector");
    d.basis.push_back(inverse(columns_matrix(cols, n, v.field)));
  }
  const Tail left = use_tails ? v.left_tail : Tail::Zero;
  const Tail right = use_tails ? v.right_tail : Tail::Zero;
  d.normal_form = normal_form_module(d.barcode, v.start, v.end(), v.field, v.directions(),
                                     left, right);
  return d;
}

Decomposition run_engine(const ZigzagModule& v, const DecomposeOptions& options,
                         bool use_tails) {
  require_valid(v);
  Sweep sweep(v, options.choice);
  sweep.run();
  Decomposition d = assemble(v, sweep.bars(), use_tails);
  if (auto r = verify_decomposition(v, d); !r.ok()) {
    throw InternalError("decomposition failed its own certificate: " + r.message);
  }
  return d;
}

}  // namespace

ZigzagModule normal_form_module(const Barcode& barcode, Index s, Index t, PrimeField field,
                                const std::vector<Direction>& directions, Tail left,
                                Tail right) {
  if (directions.size() != static_cast<std::size_t>(t - s)) {
    throw InvalidInput("normal form: orientation length mismatch");
  }
  for (const auto& iv : barcode) {
    if (iv.hi < s || iv.lo > t) {
      throw InvalidInput("normal form: bar " + to_string(iv) + " misses the window");
    }
  }
  ZigzagModule m;
  m.field = field;
  m.start = s;
  m.left_tail = left;
  m.right_tail = right;
  m.dims.resize(static_cast<std::size_t>(t - s + 1));
  // position of each bar at each index, or -1
  const auto& bars = barcode.bars();
  auto position = [&](std::size_t bar, Index j) -> std::ptrdiff_t {
    if (!bars[bar].contains(j)) return -1;
    std::ptrdiff_t p = 0;
    for (std::size_t b = 0; b < bar; ++b) p += bars[b].contains(j) ? 1 : 0;
    return p;
  };
  for (Index j = s; j <= t; ++j) m.dims[static_cast<std::size_t>(j - s)] = barcode.count_containing(j);
  for (Index i = s; i < t; ++i) {
    const auto k = static_cast<std::size_t>(i - s);
    const Direction dir = directions[k];
    Matrix mat = dir == Direction::Forward ? Matrix(m.dims[k + 1], m.dims[k], field)
                                           : Matrix(m.dims[k], m.dims[k + 1], field);
    for (std::size_t b = 0; b < bars.size(); ++b) {
      const auto here = position(b, i);
      const auto there = position(b, i + 1);
      if (here < 0 || there < 0) continue;
      if (dir == Direction::Forward) {
        mat(static_cast<std::size_t>(there), static_cast<std::size_t>(here)) = 1;
      } else {
        mat(static_cast<std::size_t>(here), static_cast<std::size_t>(there)) = 1;
      }
    }
    m.edges.push_back({dir, std::move(mat)});
  }
  return m;
}

Decomposition decompose_finite(const ZigzagModule& v, const DecomposeOptions& options) {
  if (!v.finite()) {
    throw InvalidInput("decompose_finite needs Zero tails; use decompose_tailed");
  }
  return run_engine(v, options, false);
}

Decomposition decompose_tailed(const ZigzagModule& v, const DecomposeOptions& options) {
  return run_engine(v, options, true);
}

std::string_view check_name(VerifyCheck c) {
  switch (c) {
    case VerifyCheck::Ok: return "ok";
    case VerifyCheck::BasisShape: return "basis shape";
    case VerifyCheck::BasisSingular: return "basis not invertible";
    case VerifyCheck::DimensionCount: return "dimension count mismatch";
    case VerifyCheck::SquareMismatch: return "square does not commute";
    case VerifyCheck::NormalForm: return "normal form mismatch";
  }
  return "unknown";
}

namespace {

VerifyReport fail(VerifyCheck c, Index i, const std::string& detail) {
  std::ostringstream os;
  os << check_name(c) << " at index " << i;
  if (!detail.empty()) os << ": " << detail;
  return {c, i, os.str()};
}

}  // namespace

VerifyReport verify_decomposition(const ZigzagModule& v, const Decomposition& d) {
  if (auto r = validate(v); !r) return fail(VerifyCheck::NormalForm, v.start, "invalid module: " + r.error);
  if (d.basis.size() != v.length()) {
    return fail(VerifyCheck::BasisShape, v.start,
                "expected " + std::to_string(v.length()) + " basis matrices, got " +
                    std::to_string(d.basis.size()));
  }
  for (Index j = v.start; j <= v.end(); ++j) {
    const auto k = static_cast<std::size_t>(j - v.start);
    const Matrix& phi = d.basis[k];
    if (phi.rows() != v.dims[k] || phi.cols() != v.dims[k] || !(phi.field() == v.field)) {
      return fail(VerifyCheck::BasisShape, j, "expected square of size " + std::to_string(v.dims[k]));
    }
    if (!is_invertible(phi)) return fail(VerifyCheck::BasisSingular, j, "");
  }
  for (Index j = v.start; j <= v.end(); ++j) {
    const std::size_t want = v.dims[static_cast<std::size_t>(j - v.start)];
    const std::size_t got = d.barcode.count_containing(j);
    if (want != got) {
      return fail(VerifyCheck::DimensionCount, j,
                  "dim " + std::to_string(want) + ", bars " + std::to_string(got));
    }
  }
  const ZigzagModule& n = d.normal_form;
  if (n.start != v.start || n.dims != v.dims || n.directions() != v.directions() ||
      !validate(n).ok()) {
    return fail(VerifyCheck::NormalForm, v.start, "normal form has a different shape");
  }
  for (Index i = v.start; i < v.end(); ++i) {
    const auto k = static_cast<std::size_t>(i - v.start);
    const auto& e = v.edges[k];
    const auto& ne = n.edges[k];
    const bool ok = e.direction == Direction::Forward
                        ? d.basis[k + 1] * e.matrix == ne.matrix * d.basis[k]
                        : d.basis[k] * e.matrix == ne.matrix * d.basis[k + 1];
    if (!ok) return fail(VerifyCheck::SquareMismatch, i, "edge " + std::to_string(i));
  }
  // Infinite bars need the matching Iso tail and must reach the boundary;
  // an Iso tail over a nonzero boundary sends every boundary bar to infinity.
  const bool left_iso = v.left_tail == Tail::Iso && v.dims.front() > 0;
  const bool right_iso = v.right_tail == Tail::Iso && v.dims.back() > 0;
  for (const auto& iv : d.barcode) {
    if (iv.left_infinite() != (left_iso && iv.contains(v.start))) {
      return fail(VerifyCheck::NormalForm, v.start, "bar " + to_string(iv) + " disagrees with the left tail");
    }
    if (iv.right_infinite() != (right_iso && iv.contains(v.end()))) {
      return fail(VerifyCheck::NormalForm, v.end(), "bar " + to_string(iv) + " disagrees with the right tail");
    }
  }
  const ZigzagModule expected = normal_form_module(d.barcode, v.start, v.end(), v.field,
                                                   v.directions(), n.left_tail, n.right_tail);
  for (std::size_t k = 0; k < n.edges.size(); ++k) {
    if (!(n.edges[k].matrix == expected.edges[k].matrix)) {
      return fail(VerifyCheck::NormalForm, v.start + static_cast<Index>(k),
                  "edge is not the interval pattern of the barcode");
    }
  }
  return {};
}

}  // namespace zigzag
