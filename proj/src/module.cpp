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

#include "zigzag/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zigzag {

Interval::Interval(Index lo_, Index hi_) : lo(lo_), hi(hi_) {
  if (lo == kPosInf || hi == kNegInf) {
    throw InvalidInput("interval endpoints: lo cannot be +inf, hi cannot be -inf");
  }
  if (lo > hi) {
    throw InvalidInput("interval " + to_string(*this) + " has lo > hi");
  }
}

std::string endpoint_to_string(Index e) {
  if (e == kNegInf) return "-inf";
  if (e == kPosInf) return "+inf";
  return std::to_string(e);
}

std::string to_string(const Interval& iv) {
  return "[" + endpoint_to_string(iv.lo) + "," + endpoint_to_string(iv.hi) + "]";
}

Barcode::Barcode(std::vector<Interval> bars) : bars_(std::move(bars)) {
  std::sort(bars_.begin(), bars_.end());
}

void Barcode::insert(Interval iv) {
  bars_.insert(std::upper_bound(bars_.begin(), bars_.end(), iv), iv);
}

bool Barcode::erase_one(const Interval& iv) {
  auto it = std::lower_bound(bars_.begin(), bars_.end(), iv);
  if (it == bars_.end() || *it != iv) return false;
  bars_.erase(it);
  return true;
}

bool Barcode::contains(const Interval& iv) const {
  return std::binary_search(bars_.begin(), bars_.end(), iv);
}

Barcode Barcode::merged(const Barcode& other) const {
  std::vector<Interval> all;
  all.reserve(size() + other.size());
  std::merge(bars_.begin(), bars_.end(), other.bars_.begin(), other.bars_.end(),
             std::back_inserter(all));
  Barcode out;
  out.bars_ = std::move(all);
  return out;
}

std::vector<std::pair<Interval, std::size_t>> Barcode::grouped() const {
  std::vector<std::pair<Interval, std::size_t>> out;
  for (const auto& iv : bars_) {
    if (!out.empty() && out.back().first == iv) {
      ++out.back().second;
    } else {
      out.emplace_back(iv, 1);
    }
  }
  return out;
}

std::size_t Barcode::count_containing(Index i) const {
  return static_cast<std::size_t>(std::count_if(
      bars_.begin(), bars_.end(), [i](const Interval& iv) { return iv.contains(i); }));
}

std::size_t Barcode::count_spanning(Index i) const {
  return static_cast<std::size_t>(
      std::count_if(bars_.begin(), bars_.end(), [i](const Interval& iv) {
        return iv.contains(i) && iv.contains(i + 1);
      }));
}

bool Barcode::subset_of(const Barcode& other) const {
  return std::includes(other.bars_.begin(), other.bars_.end(), bars_.begin(),
                       bars_.end());
}

std::string to_string(const Barcode& b) {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    out += (i ? " " : "") + to_string(b.bars()[i]);
  }
  return out + "}";
}

std::size_t ZigzagModule::dim(Index i) const {
  if (in_window(i)) return dims[static_cast<std::size_t>(i - start)];
  if (i < start) return left_tail == Tail::Iso ? dims.front() : 0;
  return right_tail == Tail::Iso ? dims.back() : 0;
}

std::size_t ZigzagModule::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

std::vector<Direction> ZigzagModule::directions() const {
  std::vector<Direction> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(e.direction);
  return out;
}

bool ZigzagModule::operator==(const ZigzagModule& o) const {
  if (!(field == o.field) || start != o.start || dims != o.dims ||
      left_tail != o.left_tail || right_tail != o.right_tail ||
      edges.size() != o.edges.size()) {
    return false;
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].direction != o.edges[k].direction ||
        !(edges[k].matrix == o.edges[k].matrix)) {
      return false;
    }
  }
  return true;
}

CheckResult validate(const ZigzagModule& m) {
  if (m.dims.empty()) return {"window malformed: no indices"};
  if (m.edges.size() + 1 != m.dims.size()) {
    std::ostringstream os;
    os << "window malformed: " << m.dims.size() << " dims need "
       << m.dims.size() - 1 << " edges, got " << m.edges.size();
    return {os.str()};
  }
  for (std::size_t k = 0; k < m.edges.size(); ++k) {
    const auto& e = m.edges[k];
    const Index i = m.start + static_cast<Index>(k);
    if (!(e.matrix.field() == m.field)) {
      std::ostringstream os;
      os << "edge " << i << ": matrix is over F_" << e.matrix.modulus()
         << ", module over F_" << m.field.modulus();
      return {os.str()};
    }
    const std::size_t src = e.direction == Direction::Forward ? m.dims[k] : m.dims[k + 1];
    const std::size_t dst = e.direction == Direction::Forward ? m.dims[k + 1] : m.dims[k];
    if (e.matrix.rows() != dst || e.matrix.cols() != src) {
      std::ostringstream os;
      os << "edge " << i << ": expected " << dst << "x" << src << ", got "
         << e.matrix.rows() << "x" << e.matrix.cols();
      return {os.str()};
    }
  }
  return {};
}

void require_valid(const ZigzagModule& m) {
  if (auto r = validate(m); !r) throw InvalidInput(r.error);
}

std::vector<Direction> canonical_directions(Index s, Index t) {
  std::vector<Direction> out;
  for (Index i = s; i < t; ++i) out.push_back(canonical_direction(i));
  return out;
}

ZigzagModule zero_module(Index s, Index t, PrimeField field) {
  if (s > t) throw InvalidInput("window malformed: start after end");
  ZigzagModule m;
  m.field = field;
  m.start = s;
  m.dims.assign(static_cast<std::size_t>(t - s + 1), 0);
  for (Index i = s; i < t; ++i) {
    m.edges.push_back({canonical_direction(i), Matrix(0, 0, field)});
  }
  return m;
}

bool is_canonical_shape(const ZigzagModule& m) {
  for (std::size_t k = 0; k < m.edges.size(); ++k) {
    if (m.edges[k].direction != canonical_direction(m.start + static_cast<Index>(k))) {
      return false;
    }
  }
  return true;
}

ZigzagModule interval_module(Interval iv, Index s, Index t, PrimeField field) {
  return interval_module(iv, s, t, field, canonical_directions(s, t));
}

ZigzagModule interval_module(Interval iv, Index s, Index t, PrimeField field,
                             const std::vector<Direction>& directions) {
  if (s > t) throw InvalidInput("window malformed: start after end");
  if (directions.size() != static_cast<std::size_t>(t - s)) {
    throw InvalidInput("interval_module: orientation length mismatch");
  }
  const bool meets = iv.lo <= t && iv.hi >= s;
  if (!iv.finite() && !meets) {
    throw InvalidInput("interval " + to_string(iv) +
                       " is infinite but misses the window; tails would be ambiguous");
  }
  ZigzagModule m;
  m.field = field;
  m.start = s;
  m.dims.resize(static_cast<std::size_t>(t - s + 1));
  for (Index i = s; i <= t; ++i) {
    m.dims[static_cast<std::size_t>(i - s)] = iv.contains(i) ? 1 : 0;
  }
  for (Index i = s; i < t; ++i) {
    const auto k = static_cast<std::size_t>(i - s);
    const std::size_t a = m.dims[k];
    const std::size_t b = m.dims[k + 1];
    const Direction d = directions[k];
    Matrix mat = d == Direction::Forward ? Matrix(b, a, field) : Matrix(a, b, field);
    if (a == 1 && b == 1) mat(0, 0) = 1;
    m.edges.push_back({d, std::move(mat)});
  }
  m.left_tail = iv.left_infinite() ? Tail::Iso : Tail::Zero;
  m.right_tail = iv.right_infinite() ? Tail::Iso : Tail::Zero;
  return m;
}

namespace {

// An Iso tail over a zero boundary space is the same module as a Zero tail.
Tail effective_tail(Tail t, std::size_t boundary_dim) {
  return boundary_dim == 0 ? Tail::Zero : t;
}

Tail sum_tail(Tail a, std::size_t da, Tail b, std::size_t db, const char* side) {
  const Tail ea = effective_tail(a, da);
  const Tail eb = effective_tail(b, db);
  if (ea == eb) return ea;
  if (ea == Tail::Zero && da == 0) return eb;
  if (eb == Tail::Zero && db == 0) return ea;
  throw InvalidInput(std::string("direct_sum: ") + side +
                     " tails differ over nonzero boundary spaces");
}

}  // namespace

ZigzagModule direct_sum(const ZigzagModule& u, const ZigzagModule& w) {
  require_valid(u);
  require_valid(w);
  if (!(u.field == w.field)) throw InvalidInput("direct_sum: modulus mismatch");
  if (u.start != w.start || u.length() != w.length()) {
    throw InvalidInput("direct_sum: window mismatch");
  }
  if (u.directions() != w.directions()) {
    throw InvalidInput("direct_sum: orientation mismatch");
  }
  ZigzagModule m;
  m.field = u.field;
  m.start = u.start;
  m.dims.resize(u.length());
  for (std::size_t k = 0; k < u.length(); ++k) m.dims[k] = u.dims[k] + w.dims[k];
  for (std::size_t k = 0; k < u.edges.size(); ++k) {
    m.edges.push_back({u.edges[k].direction,
                       block_diagonal(u.edges[k].matrix, w.edges[k].matrix)});
  }
  m.left_tail = sum_tail(u.left_tail, u.dims.front(), w.left_tail, w.dims.front(), "left");
  m.right_tail = sum_tail(u.right_tail, u.dims.back(), w.right_tail, w.dims.back(), "right");
  return m;
}

ZigzagModule restrict(const ZigzagModule& v, Index s2, Index t2) {
  require_valid(v);
  if (s2 > t2) throw InvalidInput("restrict: start after end");
  ZigzagModule m;
  m.field = v.field;
  m.start = s2;
  m.dims.resize(static_cast<std::size_t>(t2 - s2 + 1));
  for (Index i = s2; i <= t2; ++i) m.dims[static_cast<std::size_t>(i - s2)] = v.dim(i);
  for (Index i = s2; i < t2; ++i) {
    if (v.in_window(i) && v.in_window(i + 1)) {
      m.edges.push_back(v.edge(i));
      continue;
    }
    // Tail edge: identity over a replicated boundary, else a map to or from 0.
    const Direction d = canonical_direction(i);
    const std::size_t a = v.dim(i);
    const std::size_t b = v.dim(i + 1);
    Matrix mat = a == b ? Matrix::identity(a, v.field)
                 : d == Direction::Forward ? Matrix(b, a, v.field)
                                           : Matrix(a, b, v.field);
    m.edges.push_back({d, std::move(mat)});
  }
  return m;
}

ZigzagModule conjugate(const ZigzagModule& v, const std::vector<Matrix>& bases) {
  require_valid(v);
  if (bases.size() != v.length()) throw InvalidInput("conjugate: need one basis per index");
  std::vector<Matrix> inv;
  inv.reserve(bases.size());
  for (std::size_t k = 0; k < bases.size(); ++k) {
    if (bases[k].rows() != v.dims[k] || bases[k].cols() != v.dims[k]) {
      throw InvalidInput("conjugate: basis shape mismatch at offset " + std::to_string(k));
    }
    inv.push_back(inverse(bases[k]));
  }
  ZigzagModule m = v;
  for (std::size_t k = 0; k < v.edges.size(); ++k) {
    auto& e = m.edges[k];
    e.matrix = e.direction == Direction::Forward
                   ? bases[k + 1] * v.edges[k].matrix * inv[k]
                   : bases[k] * v.edges[k].matrix * inv[k + 1];
  }
  return m;
}

}  // namespace zigzag
