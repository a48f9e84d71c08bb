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

#include "zigzag/oracle.hpp"

#include <algorithm>
#include <string>

namespace zigzag {

namespace {

std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

Index between(Rng& rng, Index lo, Index hi) {
  return lo + static_cast<Index>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

bool chance(Rng& rng, double p) { return static_cast<double>(below(rng, 1000000)) < p * 1e6; }

}  // namespace

CheckResult validate_spec(const GenSpec& spec) {
  if (!is_prime(spec.modulus) || spec.modulus >= PrimeField::kMaxModulus) {
    return {"modulus must be prime"};
  }
  if (spec.s > spec.t) return {"window start after end"};
  if (!spec.directions.empty() &&
      spec.directions.size() != static_cast<std::size_t>(spec.t - spec.s)) {
    return {"orientation needs one entry per edge"};
  }
  for (const auto& iv : spec.barcode) {
    const std::string name = to_string(iv);
    if (!iv.left_infinite() && (iv.lo < spec.s || iv.lo > spec.t)) return {"bar " + name + " starts outside the window"};
    if (!iv.right_infinite() && (iv.hi < spec.s || iv.hi > spec.t)) return {"bar " + name + " ends outside the window"};
    if (iv.left_infinite() && spec.left_tail != Tail::Iso) return {"bar " + name + " needs an iso left tail"};
    if (iv.right_infinite() && spec.right_tail != Tail::Iso) return {"bar " + name + " needs an iso right tail"};
    if (iv.hi < spec.s || iv.lo > spec.t) return {"bar " + name + " misses the window"};
    if (spec.left_tail == Tail::Iso && iv.contains(spec.s) && !iv.left_infinite()) {
      return {"bar " + name + " reaches an iso left tail but is finite there"};
    }
    if (spec.right_tail == Tail::Iso && iv.contains(spec.t) && !iv.right_infinite()) {
      return {"bar " + name + " reaches an iso right tail but is finite there"};
    }
  }
  return {};
}

Matrix random_matrix(std::size_t rows, std::size_t cols, PrimeField field, Rng& rng) {
  Matrix m(rows, cols, field);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = static_cast<Scalar>(rng() % field.modulus());
  return m;
}

Matrix random_invertible(std::size_t n, PrimeField field, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(n, n, field, rng);
    if (is_invertible(m)) return m;
  }
}

Matrix random_full_rank(std::size_t rows, std::size_t cols, PrimeField field, Rng& rng) {
  const std::size_t want = std::min(rows, cols);
  for (;;) {
    Matrix m = random_matrix(rows, cols, field, rng);
    if (rank(m) == want) return m;
  }
}

ZigzagModule gen_from_barcode(const GenSpec& spec) {
  if (auto r = validate_spec(spec); !r) throw InvalidInput("gen spec: " + r.error);
  const PrimeField field(spec.modulus);
  const auto dirs = spec.directions.empty() ? canonical_directions(spec.s, spec.t) : spec.directions;
  ZigzagModule m = normal_form_module(spec.barcode, spec.s, spec.t, field, dirs, spec.left_tail,
                                      spec.right_tail);
  if (!spec.conjugate) return m;
  Rng rng(spec.seed);
  std::vector<Matrix> bases;
  bases.reserve(m.length());
  for (auto d : m.dims) bases.push_back(random_invertible(d, field, rng));
  return conjugate(m, bases);
}

Matrix RandomBasisChoice::choose(const Matrix& fresh, const Matrix& slack, bool mixable) {
  const PrimeField field = fresh.field();
  const std::size_t k = fresh.cols();
  Matrix out = mixable ? fresh * random_invertible(k, field, rng_) : fresh;
  if (slack.cols() > 0) out = out + slack * random_matrix(slack.cols(), k, field, rng_);
  return out;
}

CheckResult rank_invariant_check(const ZigzagModule& v, const Barcode& b) {
  for (Index j = v.start - 1; j <= v.end() + 1; ++j) {
    const std::size_t want = b.count_containing(j);
    if (v.dim(j) != want) {
      return {"dimension at index " + std::to_string(j) + ": module " + std::to_string(v.dim(j)) +
              ", bars " + std::to_string(want)};
    }
  }
  for (Index i = v.start; i < v.end(); ++i) {
    const std::size_t got = rank(v.edge(i).matrix);
    const std::size_t want = b.count_spanning(i);
    if (got != want) {
      return {"rank at edge " + std::to_string(i) + ": module " + std::to_string(got) +
              ", bars " + std::to_string(want)};
    }
  }
  return {};
}

KrsReport krs_cross_check(const ZigzagModule& v, std::size_t trials, std::uint64_t seed) {
  if (trials < 2) throw InvalidInput("krs_cross_check needs at least two trials");
  KrsReport report;
  for (std::size_t k = 0; k < trials; ++k) {
    RandomBasisChoice choice(seed + k);
    const Barcode b = decompose_tailed(v, {&choice}).barcode;
    if (k == 0) {
      report.first = b;
    } else if (!(b == report.first)) {
      report.ok = false;
      report.trial = k;
      report.other = b;
      return report;
    }
  }
  return report;
}

GenSpec random_spec(Rng& rng, const CorpusOptions& o) {
  GenSpec spec;
  spec.modulus = o.fields[below(rng, o.fields.size())];
  spec.seed = rng();
  const Index length = between(rng, 1, o.max_length);
  if (o.through_zero || o.contains_zero) {
    spec.s = between(rng, -(length - 1), 0);
  } else {
    spec.s = between(rng, -10, 10);
  }
  spec.t = spec.s + length - 1;
  switch (o.orientation) {
    case Orientation::Canonical: break;
    case Orientation::Forward:
      spec.directions.assign(static_cast<std::size_t>(length - 1), Direction::Forward);
      break;
    case Orientation::Random:
      for (Index i = 0; i + 1 < length; ++i) {
        spec.directions.push_back(below(rng, 2) == 0 ? Direction::Forward : Direction::Backward);
      }
      break;
  }
  spec.left_tail = chance(rng, o.iso_tail_probability) ? Tail::Iso : Tail::Zero;
  spec.right_tail = chance(rng, o.iso_tail_probability) ? Tail::Iso : Tail::Zero;

  std::vector<std::size_t> load(static_cast<std::size_t>(length), 0);
  std::vector<Interval> bars;
  const std::size_t target = below(rng, o.max_bars + 1);
  for (std::size_t attempt = 0; bars.size() < target && attempt < 4 * target; ++attempt) {
    Index lo = 0;
    Index hi = 0;
    if (o.through_zero) {
      lo = between(rng, spec.s, 0);
      hi = between(rng, 0, spec.t);
    } else {
      lo = between(rng, spec.s, spec.t);
      hi = between(rng, lo, spec.t);
    }
    bool fits = true;
    for (Index j = lo; j <= hi; ++j) fits = fits && load[static_cast<std::size_t>(j - spec.s)] < o.max_dim;
    if (!fits) continue;
    for (Index j = lo; j <= hi; ++j) ++load[static_cast<std::size_t>(j - spec.s)];
    if (spec.left_tail == Tail::Iso && lo == spec.s) lo = kNegInf;
    if (spec.right_tail == Tail::Iso && hi == spec.t) hi = kPosInf;
    bars.emplace_back(lo, hi);
  }
  spec.barcode = Barcode(std::move(bars));
  return spec;
}

}  // namespace zigzag
