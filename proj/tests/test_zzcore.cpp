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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "zigzag/canonical.hpp"
#include "zigzag/oracle.hpp"

using namespace zztest;

TEST_CASE("interval and barcode basics") {
  CHECK_THROWS_AS(Interval(3, 2), InvalidInput);
  CHECK_THROWS_AS(Interval(kPosInf, kPosInf), InvalidInput);
  CHECK_THROWS_AS(Interval(0, kNegInf), InvalidInput);
  CHECK(Interval(kNegInf, 0).left_infinite());
  CHECK(to_string(Interval(kNegInf, kPosInf)) == "[-inf,+inf]");

  Barcode b({{1, 2}, {kNegInf, 3}, {0, kPosInf}, {0, 1}, {0, 1}});
  CHECK(to_string(b) == "{[-inf,3] [0,1] [0,1] [0,+inf] [1,2]}");
  CHECK(b.count_containing(1) == 5);
  CHECK(b.count_containing(-100) == 1);
  CHECK(b.count_spanning(0) == 4);
  CHECK(b.grouped()[1].second == 2);
  CHECK(b.erase_one({0, 1}));
  CHECK(b.contains({0, 1}));
  CHECK_FALSE(b.erase_one({5, 5}));
  CHECK(Barcode({{0, 1}}).subset_of(b));
  CHECK_FALSE(Barcode({{0, 1}, {0, 1}}).subset_of(b));
}

TEST_CASE("validate") {
  CHECK(validate(zero_module(0, 0, PrimeField(2))).ok());
  const auto bad = module(2, 0, {1, 2}, {fwd(M({{1}}))});
  const auto r = validate(bad);
  CHECK_FALSE(r.ok());
  CHECK(r.error == "edge 0: expected 2x1, got 1x1");
  auto no_edges = module(2, 0, {1, 1}, {});
  CHECK(validate(no_edges).error.find("window malformed") == 0);
  auto mixed = module(2, 0, {1, 1}, {fwd(M({{1}}, 3))});
  CHECK_FALSE(validate(mixed).ok());

  Rng rng(1);
  for (int k = 0; k < 50; ++k) CHECK(validate(gen_from_barcode(random_spec(rng))).ok());
}

TEST_CASE("interval_module examples") {
  const PrimeField f2(2);
  const auto m = interval_module({0, 1}, 0, 2, f2);
  CHECK(m.dims == std::vector<std::size_t>{1, 1, 0});
  CHECK(m.edges[0].direction == Direction::Forward);
  CHECK(m.edges[0].matrix == M({{1}}));
  CHECK(m.edges[1].matrix.rows() == 1);
  CHECK(m.edges[1].matrix.cols() == 0);
  CHECK(m.finite());

  const auto all = interval_module({kNegInf, kPosInf}, 0, 2, f2);
  CHECK(all.dims == std::vector<std::size_t>{1, 1, 1});
  CHECK(all.left_tail == Tail::Iso);
  CHECK(all.right_tail == Tail::Iso);
  CHECK(all.edges[1].matrix == M({{1}}));

  CHECK(interval_module({5, 7}, 0, 2, f2).is_zero());
  CHECK_THROWS_AS(interval_module({5, kPosInf}, 0, 2, f2), InvalidInput);
}

TEST_CASE("direct_sum example and properties") {
  const PrimeField f2(2);
  const auto s = direct_sum(interval_module({0, 1}, 0, 2, f2), interval_module({1, 2}, 0, 2, f2));
  CHECK(s.dims == std::vector<std::size_t>{1, 2, 1});
  CHECK(s.edges[0].matrix == M({{1}, {0}}));
  CHECK(s.edges[1].matrix == M({{0}, {1}}));
  CHECK(s == block_module());
  CHECK(decompose_finite(s).barcode == bars({{0, 1}, {1, 2}}));

  CHECK(direct_sum(s, zero_module(0, 2, f2)) == s);
  CHECK_THROWS_AS(direct_sum(s, zero_module(0, 3, f2)), InvalidInput);
  CHECK_THROWS_AS(direct_sum(s, zero_module(0, 2, PrimeField(3))), InvalidInput);

  // Zero over a zero boundary combines with Iso.
  const auto iso = interval_module({kNegInf, 2}, 0, 2, f2);
  const auto mixed = direct_sum(interval_module({1, 2}, 0, 2, f2), iso);
  CHECK(mixed.left_tail == Tail::Iso);

  Rng rng(2);
  for (int k = 0; k < 40; ++k) {
    CorpusOptions o;
    o.orientation = Orientation::Canonical;
    o.max_length = 10;
    auto a = random_spec(rng, o);
    auto b = random_spec(rng, o);
    b.s = a.s;
    b.t = a.t;
    b.modulus = a.modulus;
    b.left_tail = b.right_tail = Tail::Zero;
    a.left_tail = a.right_tail = Tail::Zero;
    std::vector<Interval> kept;
    for (const auto& iv : b.barcode) {
      if (iv.lo >= a.s && iv.hi <= a.t && iv.finite()) kept.push_back(iv);
    }
    b.barcode = Barcode(kept);
    std::vector<Interval> kept_a;
    for (const auto& iv : a.barcode)
      if (iv.finite()) kept_a.push_back(iv);
    a.barcode = Barcode(kept_a);
    const auto u = gen_from_barcode(a);
    const auto w = gen_from_barcode(b);
    const auto uw = direct_sum(u, w);
    for (std::size_t i = 0; i < u.length(); ++i) CHECK(uw.dims[i] == u.dims[i] + w.dims[i]);
    CHECK(decompose_finite(uw).barcode == a.barcode.merged(b.barcode));
  }
}

TEST_CASE("restrict examples and composition") {
  const PrimeField f2(2);
  const auto v = interval_module({0, 5}, 0, 5, f2);
  const auto r = restrict(v, 2, 3);
  CHECK(r.start == 2);
  CHECK(r.dims == std::vector<std::size_t>{1, 1});
  CHECK(r.edges[0].matrix == M({{1}}));
  CHECK(restrict(v, 6, 7).is_zero());
  CHECK(restrict(v, 6, 7).start == 6);

  // Right Iso tail with boundary dim 2 at t = 4.
  auto tailed = module(2, 3, {2, 2}, {bwd(Matrix::identity(2, f2))}, Tail::Zero, Tail::Iso);
  const auto ext = restrict(tailed, 3, 6);
  CHECK(ext.dims == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(ext.edges[1].matrix == Matrix::identity(2, f2));
  CHECK(ext.edges[2].matrix == Matrix::identity(2, f2));
  CHECK(ext.finite());
  CHECK(decompose_finite(ext).barcode == bars({{3, 6}, {3, 6}}));
  CHECK(decompose_tailed(tailed).barcode == bars({{3, kPosInf}, {3, kPosInf}}));

  Rng rng(3);
  for (int k = 0; k < 60; ++k) {
    CorpusOptions o;
    o.iso_tail_probability = 0.5;
    const auto spec = random_spec(rng, o);
    const auto m = gen_from_barcode(spec);
    const Index s = spec.s - 3 + static_cast<Index>(rng() % 4);
    const Index t = spec.t + 3 - static_cast<Index>(rng() % 4);
    if (s > t) continue;
    const Index s2 = s + static_cast<Index>(rng() % static_cast<std::uint64_t>(t - s + 1));
    const Index t2 = s2 + static_cast<Index>(rng() % static_cast<std::uint64_t>(t - s2 + 1));
    CHECK(restrict(restrict(m, s, t), s2, t2) == restrict(m, s2, t2));
  }
}

TEST_CASE("canonicalize examples") {
  const PrimeField f2(2);
  SUBCASE("discrete persistence chain") {
    auto chain = module(2, 0, {1, 1, 1}, {fwd(M({{1}})), fwd(M({{1}}))});
    const auto c = canonicalize(chain);
    CHECK(c.module.start == 0);
    CHECK(c.module.dims == std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(is_canonical_shape(c.module));
    for (const auto& e : c.module.edges) CHECK(e.matrix == M({{1}}));
    const auto b = decompose_finite(c.module).barcode;
    CHECK(b == bars({{0, 4}}));
    CHECK(pull_back_barcode(b) == bars({{0, 2}}));
  }
  SUBCASE("single space") {
    auto single = module(2, 0, {3}, {});
    const auto c = canonicalize(single);
    CHECK(c.module.dims == std::vector<std::size_t>{3});
    CHECK(c.module.edges.empty());
  }
  SUBCASE("already canonical") {
    const auto c = canonicalize(block_module());
    CHECK(pull_back_barcode(decompose_finite(c.module).barcode) ==
          decompose_finite(block_module()).barcode);
  }
  CHECK(IndexMap::canonical_of(-3) == -6);
  CHECK(IndexMap::original_of(-6) == -3);
  CHECK_FALSE(IndexMap::original_of(5).has_value());
}

TEST_CASE("pull_back_barcode examples") {
  CHECK(pull_back_barcode(bars({{0, 4}})) == bars({{0, 2}}));
  CHECK(pull_back_barcode(bars({{kNegInf, kPosInf}})) == bars({{kNegInf, kPosInf}}));
  CHECK(pull_back_barcode(bars({{2, 2}})) == bars({{1, 1}}));
  CHECK(pull_back_barcode(bars({{-3, 1}})) == bars({{-1, 0}}));
  CHECK_THROWS_AS(pull_back_barcode(bars({{1, 1}})), InternalError);
}

TEST_CASE("canonicalize preserves even dimensions and the barcode") {
  Rng rng(4);
  for (int k = 0; k < 80; ++k) {
    CorpusOptions o;
    o.max_length = 15;
    const auto spec = random_spec(rng, o);
    auto v = gen_from_barcode(spec);
    v.left_tail = v.right_tail = Tail::Zero;
    const auto c = canonicalize(v);
    for (Index i = v.start; i <= v.end(); ++i) CHECK(c.module.dim(2 * i) == v.dim(i));
    CHECK(pull_back_barcode(decompose_finite(c.module).barcode) == decompose_finite(v).barcode);
  }
}

TEST_CASE("conjugate keeps the module isomorphic") {
  Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    const auto spec = random_spec(rng);
    const auto v = gen_from_barcode(spec);
    std::vector<Matrix> p;
    for (auto d : v.dims) p.push_back(random_invertible(d, v.field, rng));
    const auto w = conjugate(v, p);
    CHECK(validate(w).ok());
    CHECK(decompose_tailed(w).barcode == decompose_tailed(v).barcode);
    std::vector<Matrix> inv;
    for (const auto& m : p) inv.push_back(inverse(m));
    CHECK(conjugate(w, inv) == v);
  }
}
