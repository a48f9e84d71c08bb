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

#ifndef ZIGZAG_CANONICAL_HPP
#define ZIGZAG_CANONICAL_HPP

#include <optional>

#include "zigzag/module.hpp"

namespace zigzag {

/// Original index i sits at canonical index 2i; odd canonical indices are the
/// inserted sinks.
struct IndexMap {
  static constexpr Index canonical_of(Index original) { return 2 * original; }
  static std::optional<Index> original_of(Index canonical);
};

struct CanonicalModule {
  ZigzagModule module;
  IndexMap index_map;
};

/// Rewrites any orientation into sources-at-even / sinks-at-odd by inserting
/// one sink per edge. Forward edge i -> i+1: the sink copies V_{i+1}, the map
/// from 2i is the original matrix and the map from 2i+2 is the identity.
/// Backward edge: the sink copies V_i, identity from 2i, original from 2i+2.
CanonicalModule canonicalize(const ZigzagModule& v);

/// [a', b'] -> [ceil(a'/2), floor(b'/2)]. Throws InternalError for a bar
/// supported only on an inserted sink.
Barcode pull_back_barcode(const Barcode& b, const IndexMap& map = {});

}  // namespace zigzag

#endif  // ZIGZAG_CANONICAL_HPP
