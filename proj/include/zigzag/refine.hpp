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

#ifndef ZIGZAG_REFINE_HPP
#define ZIGZAG_REFINE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "zigzag/decompose.hpp"
#include "zigzag/subspace.hpp"

namespace zigzag {

/// One yield of a window stream: the module on [-k, k] with Zero tails.
/// The last yield also says how the module continues past [-k, k].
struct WindowYield {
  ZigzagModule module;
  bool last = false;
  Tail left_tail = Tail::Zero;
  Tail right_tail = Tail::Zero;
};

class WindowStream {
 public:
  virtual ~WindowStream() = default;
  /// Yields k = 0, 1, 2, ... in order; nullopt once exhausted.
  virtual std::optional<WindowYield> next() = 0;
};

/// Streams restrict(v, -k, k) and ends once [-k, k] holds v's window with
/// one index to spare, reporting v's tails.
class ModuleStream : public WindowStream {
 public:
  explicit ModuleStream(ZigzagModule v);
  std::optional<WindowYield> next() override;
  Index last_radius() const { return last_; }

 private:
  ZigzagModule v_;
  Index k_ = 0;
  Index last_ = 0;
};

/// Replays a fixed list of yields; used to feed malformed streams.
class ReplayStream : public WindowStream {
 public:
  explicit ReplayStream(std::vector<WindowYield> items) : items_(std::move(items)) {}
  std::optional<WindowYield> next() override;

 private:
  std::vector<WindowYield> items_;
  std::size_t pos_ = 0;
};

/// A summand of V on the current window [-k, k], as subspaces of V.
/// Finalized nodes are summands of V itself and never change; pending nodes
/// are the current provisional split of what remains.
struct RefinementNode {
  /// Finalized: (step of finalization, rank among bars finalized then).
  /// Pending: (k, position in the pending barcode).
  std::vector<std::size_t> path;
  Interval bar;
  bool finalized = false;
  Index finalized_at = -1;
  /// subspaces[i + k] lives in V_i.
  std::vector<Subspace> subspaces;
};

/// State after consuming the window [-k, k].
///
/// theta[i + k] is an isomorphism V_i -> R_i (+) F_i: R is the remainder in
/// the normal form of `pending` and F the normal form of `finalized`, both in
/// barcode order. Every finalized bar lies strictly inside the window where
/// it was split off, so it is a direct summand of V.
struct RefinementTree {
  Index radius = -1;
  ZigzagModule window;
  std::vector<Matrix> theta;
  ZigzagModule remainder;
  Barcode pending;
  Barcode finalized;
  /// Step at which finalized.bars()[n] was split off.
  std::vector<Index> finalized_at;

  bool empty() const { return radius < 0; }
  std::vector<RefinementNode> nodes() const;
};

/// Consumes V|[-(k+1), k+1]. Throws InvalidInput when it disagrees with the
/// previous window or does not grow by one index per side.
RefinementTree refine_step(const RefinementTree& tree, const ZigzagModule& next_window);

/// Resolves the pending part using the tails past the tree's window. The
/// barcode is the full barcode of V and the basis a certificate for the
/// window module with those tails; checked before returning.
Decomposition resolve_tree(const RefinementTree& tree, Tail left, Tail right);

struct StreamReport {
  Index radius = 0;
  Barcode finalized;
  Barcode pending;
  /// Set on the report that follows the end marker; `barcode` is then the
  /// barcode of V and `finalized` equals it.
  bool complete = false;
  Barcode barcode;
};

struct StreamOptions {
  /// Stop after this radius even if the stream goes on.
  std::optional<Index> window_limit;
  std::function<void(const RefinementTree&, const StreamReport&)> observer;
};

/// One report per window, plus a final complete report when the stream ends
/// with its tails.
std::vector<StreamReport> stream_decompose(WindowStream& src, const StreamOptions& options = {});

}  // namespace zigzag

#endif  // ZIGZAG_REFINE_HPP
