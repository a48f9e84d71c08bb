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

#ifndef ZIGZAG_SPLITTING_HPP
#define ZIGZAG_SPLITTING_HPP

#include <vector>

#include "zigzag/decompose.hpp"
#include "zigzag/subspace.hpp"

namespace zigzag {

/// Complementary pairs at i and i+1 produced by propagate_splitting.
struct SplitPair {
  Subspace u, w;            // at i
  Subspace u_next, w_next;  // at i+1
};

/// Given V_{i-1} <-g- V_i -f-> V_{i+1} with g surjective and f injective,
/// and V_{i-1} = u_prev (+) w_prev, returns splittings with g(u) = u_prev,
/// g(w) in w_prev, f(u) = u_next and f(w) in w_next.
///
/// u = g^{-1}(u_prev). w is a complement of ker g inside g^{-1}(w_prev);
/// w_next is f(w) plus the standard complement of im f.
SplitPair propagate_splitting(const Matrix& g, const Matrix& f, const Subspace& u_prev,
                              const Subspace& w_prev);

struct SplitResult {
  /// U with v = U (+) bars; identical to v outside the split window.
  ZigzagModule remainder;
  /// The bars split off, in barcode order.
  Barcode bars;
  /// Decomposition of v restricted to the split window.
  Decomposition window_certificate;
  /// psi at every index of v's window: V_i -> U_i (+) (split bars at i),
  /// split coordinates last.
  std::vector<Matrix> splitting;
};

/// Splits the interior bar [a, b] (s < a <= b < t) of v|[s, t] off v.
/// [s, t] must lie inside v's window. Throws InvalidInput when the bar
/// touches the window boundary or is not in the restriction's barcode.
SplitResult split_interior_interval(const ZigzagModule& v, Index s, Index t, Interval bar);

/// Splits every bar of v|[s, t] strictly inside (s, t) at once.
SplitResult split_all_interior(const ZigzagModule& v, Index s, Index t);

/// Checks that the splitting maps are invertible and intertwine v with
/// remainder (+) (direct sum of the split interval modules).
CheckResult verify_splitting(const ZigzagModule& v, const SplitResult& r);

struct StabilizationBounds {
  Index s = 0;
  Index t = 0;
  bool operator==(const StabilizationBounds&) const = default;
};

/// For a canonical-shape module: the least even t >= 0 with f_i injective and
/// g_i surjective at every even i >= t, and the greatest even s <= 0 with f_i
/// surjective and g_i injective at every even i <= s. Maps follow the tail
/// semantics past the window. Throws InvalidInput for other orientations.
StabilizationBounds stabilization_bounds(const ZigzagModule& v);

/// f_i : V_i -> V_{i+1} and g_i : V_i -> V_{i-1} at an even index of a
/// canonical-shape module, tails included.
Matrix forward_map_at(const ZigzagModule& v, Index even_i);
Matrix backward_map_at(const ZigzagModule& v, Index even_i);

}  // namespace zigzag

#endif  // ZIGZAG_SPLITTING_HPP
