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

#ifndef ZIGZAG_ORACLE_HPP
#define ZIGZAG_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "zigzag/decompose.hpp"

namespace zigzag {

/// PRNG used by every seeded routine: std::mt19937_64, one draw per field
/// entry reduced with `% p`.
using Rng = std::mt19937_64;

/// A module with a prescribed barcode, to be realized by gen_from_barcode.
struct GenSpec {
  Barcode barcode;
  Index s = 0;
  Index t = 0;
  /// One entry per edge; empty means the canonical orientation.
  std::vector<Direction> directions;
  std::uint32_t modulus = 2;
  std::uint64_t seed = 0;
  Tail left_tail = Tail::Zero;
  Tail right_tail = Tail::Zero;
  /// false skips the random base change and returns the normal form.
  bool conjugate = true;
};

/// Checks the spec invariants: finite endpoints in [s, t], infinite
/// endpoints only with an Iso tail on that side, and with an Iso tail every
/// bar reaching the boundary must be infinite there.
CheckResult validate_spec(const GenSpec& spec);

/// The normal form of spec.barcode on [s, t], conjugated at every index by
/// a uniformly random invertible matrix. Index s is sampled first; each
/// candidate is drawn row-major and rejected while singular.
ZigzagModule gen_from_barcode(const GenSpec& spec);

Matrix random_matrix(std::size_t rows, std::size_t cols, PrimeField field, Rng& rng);
Matrix random_invertible(std::size_t n, PrimeField field, Rng& rng);
/// Rank min(rows, cols): surjective when rows <= cols, injective otherwise.
Matrix random_full_rank(std::size_t rows, std::size_t cols, PrimeField field, Rng& rng);

/// Replaces every engine basis choice by a random valid one.
class RandomBasisChoice : public BasisChoice {
 public:
  explicit RandomBasisChoice(std::uint64_t seed) : rng_(seed) {}
  Matrix choose(const Matrix& fresh, const Matrix& slack, bool mixable) override;

 private:
  Rng rng_;
};

/// dim V_i against the bars containing i, and the rank of every edge map
/// against the bars containing both ends. Uses ranks only.
CheckResult rank_invariant_check(const ZigzagModule& v, const Barcode& b);

struct KrsReport {
  bool ok = true;
  std::size_t trial = 0;  // first trial that disagreed with trial 0
  Barcode first;
  Barcode other;
};

/// Decomposes v `trials` times with RandomBasisChoice(seed + k) and compares
/// the barcodes. Throws InvalidInput for trials < 2.
KrsReport krs_cross_check(const ZigzagModule& v, std::size_t trials, std::uint64_t seed = 0);

enum class Orientation { Canonical, Forward, Random };

struct CorpusOptions {
  Index max_length = 40;
  std::size_t max_dim = 8;
  std::size_t max_bars = 30;
  std::vector<std::uint32_t> fields{2, 3, 101};
  Orientation orientation = Orientation::Random;
  /// Probability of an Iso tail on each side.
  double iso_tail_probability = 0.0;
  /// Windows contain 0 and every bar contains 0.
  bool through_zero = false;
  /// Window always contains 0.
  bool contains_zero = false;
};

/// A random valid GenSpec; the spec's own seed is drawn from `rng`.
GenSpec random_spec(Rng& rng, const CorpusOptions& options = {});

}  // namespace zigzag

#endif  // ZIGZAG_ORACLE_HPP
