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

#ifndef ZIGZAG_MODULE_HPP
#define ZIGZAG_MODULE_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/matrix.hpp"

namespace zigzag {

using Index = std::int64_t;

inline constexpr Index kNegInf = std::numeric_limits<Index>::min();
inline constexpr Index kPosInf = std::numeric_limits<Index>::max();

/// Closed interval [lo, hi] of indices; lo may be kNegInf and hi kPosInf.
struct Interval {
  Index lo = 0;
  Index hi = 0;

  Interval() = default;
  /// Throws InvalidInput when lo > hi or an endpoint is the wrong infinity.
  Interval(Index lo_, Index hi_);

  bool contains(Index i) const { return lo <= i && i <= hi; }
  bool left_infinite() const { return lo == kNegInf; }
  bool right_infinite() const { return hi == kPosInf; }
  bool finite() const { return !left_infinite() && !right_infinite(); }

  auto operator<=>(const Interval&) const = default;
};

std::string to_string(const Interval& iv);
std::string endpoint_to_string(Index e);

/// Multiset of intervals, kept sorted by (lo, hi).
class Barcode {
 public:
  Barcode() = default;
  explicit Barcode(std::vector<Interval> bars);

  void insert(Interval iv);
  /// Removes one copy; returns false when `iv` is absent.
  bool erase_one(const Interval& iv);
  bool contains(const Interval& iv) const;
  Barcode merged(const Barcode& other) const;

  const std::vector<Interval>& bars() const { return bars_; }
  std::size_t size() const { return bars_.size(); }
  bool empty() const { return bars_.empty(); }
  auto begin() const { return bars_.begin(); }
  auto end() const { return bars_.end(); }

  /// Distinct intervals with their multiplicities, in canonical order.
  std::vector<std::pair<Interval, std::size_t>> grouped() const;
  std::size_t count_containing(Index i) const;
  /// Bars containing both i and i + 1.
  std::size_t count_spanning(Index i) const;
  /// True when this is a sub-multiset of `other`.
  bool subset_of(const Barcode& other) const;

  bool operator==(const Barcode&) const = default;

 private:
  std::vector<Interval> bars_;
};

std::string to_string(const Barcode& b);

enum class Direction : std::uint8_t {
  Forward,   // i -> i+1
  Backward,  // i+1 -> i
};

/// Orientation of the edge between i and i+1 in the canonical shape: sources
/// at even indices, sinks at odd ones.
constexpr Direction canonical_direction(Index i) {
  return (i % 2 == 0) ? Direction::Forward : Direction::Backward;
}

/// The map on the edge between i and i+1. Forward: dim(i+1) x dim(i).
/// Backward: dim(i) x dim(i+1).
struct EdgeMap {
  Direction direction = Direction::Forward;
  Matrix matrix;
};

/// Behavior of a module beyond its stored window.
enum class Tail : std::uint8_t {
  Zero,  // all spaces are zero
  Iso,   // boundary space repeated forever, identity maps
};

/// A zigzag module stored on the window [start, start + dims.size() - 1].
/// edges[k] joins start + k and start + k + 1.
struct ZigzagModule {
  PrimeField field{};
  Index start = 0;
  std::vector<std::size_t> dims{0};
  std::vector<EdgeMap> edges;
  Tail left_tail = Tail::Zero;
  Tail right_tail = Tail::Zero;

  Index end() const { return start + static_cast<Index>(dims.size()) - 1; }
  std::size_t length() const { return dims.size(); }
  bool in_window(Index i) const { return start <= i && i <= end(); }
  /// Dimension at any integer, following the tail semantics.
  std::size_t dim(Index i) const;
  const EdgeMap& edge(Index i) const {
    return edges[static_cast<std::size_t>(i - start)];
  }
  bool finite() const {
    return left_tail == Tail::Zero && right_tail == Tail::Zero;
  }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  std::vector<Direction> directions() const;

  bool operator==(const ZigzagModule& o) const;
};

struct CheckResult {
  std::string error;
  bool ok() const { return error.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Confirms every structural invariant; the message names the first failure.
CheckResult validate(const ZigzagModule& m);
/// validate() but throwing InvalidInput.
void require_valid(const ZigzagModule& m);

ZigzagModule zero_module(Index s, Index t, PrimeField field);
/// Canonical orientation on [s, t].
std::vector<Direction> canonical_directions(Index s, Index t);
bool is_canonical_shape(const ZigzagModule& m);

/// I^{[a,b]} seen through the window [s, t], canonical orientation.
ZigzagModule interval_module(Interval iv, Index s, Index t, PrimeField field);
/// Same with an explicit orientation (one entry per edge of the window).
ZigzagModule interval_module(Interval iv, Index s, Index t, PrimeField field,
                             const std::vector<Direction>& directions);

/// Pointwise direct sum with block-diagonal edge maps (u's block first).
ZigzagModule direct_sum(const ZigzagModule& u, const ZigzagModule& w);

/// The finite module on exactly [s2, t2], padding with tail data where the
/// requested window leaves the stored one. Padded edges get the canonical
/// orientation of their position.
ZigzagModule restrict(const ZigzagModule& v, Index s2, Index t2);

/// The same module with a base change P_i at every index: forward maps become
/// P_{i+1} f P_i^{-1}, backward maps P_i g P_{i+1}^{-1}.
ZigzagModule conjugate(const ZigzagModule& v, const std::vector<Matrix>& bases);

}  // namespace zigzag

#endif  // ZIGZAG_MODULE_HPP
