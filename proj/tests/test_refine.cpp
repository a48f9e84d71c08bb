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
#include "zigzag/oracle.hpp"
#include "zigzag/refine.hpp"

using namespace zztest;

namespace {

std::vector<StreamReport> run(const ZigzagModule& v, StreamOptions opts = {}) {
  ModuleStream src(v);
  return stream_decompose(src, opts);
}

ZigzagModule padded(Interval iv, Index s, Index t, std::uint32_t p = 2) {
  return interval_module(iv, s, t, PrimeField(p));
}

}  // namespace

TEST_CASE("identity stream never finalizes") {
  const auto v = interval_module({kNegInf, kPosInf}, 0, 0, PrimeField(2));
  const auto reports = run(v);
  REQUIRE(reports.size() >= 2);
  for (const auto& r : reports) {
    if (r.complete) continue;
    CHECK(r.finalized.empty());
    CHECK(r.pending.size() == 1);
  }
  CHECK(reports.back().complete);
  CHECK(reports.back().barcode == bars({{kNegInf, kPosInf}}));
}

TEST_CASE("nested bars finalize one radius apart") {
  const auto v = direct_sum(padded({0, 0}, -1, 1), padded({-1, 1}, -1, 1));
  const auto reports = run(v);
  CHECK(reports[0].finalized.empty());
  CHECK(reports[1].finalized == bars({{0, 0}}));
  CHECK(reports[1].pending == bars({{-1, 1}}));
  CHECK(reports[2].radius == 2);
  CHECK(reports[2].finalized == bars({{-1, 1}, {0, 0}}));
  CHECK(reports[2].pending.empty());
  CHECK(reports.back().barcode == bars({{-1, 1}, {0, 0}}));
}

TEST_CASE("zero stream") {
  const auto reports = run(zero_module(0, 0, PrimeField(2)));
  for (const auto& r : reports) {
    CHECK(r.finalized.empty());
    CHECK(r.pending.empty());
  }
  CHECK(reports.back().complete);
  CHECK(reports.back().barcode.empty());
}

TEST_CASE("a single bar finalizes once both ends are interior") {
  const auto v = padded({-3, 5}, -3, 5, 3);
  const auto reports = run(v);
  Index first = -1;
  for (const auto& r : reports) {
    if (!r.complete && first < 0 && !r.finalized.empty()) first = r.radius;
  }
  CHECK(first == 6);
}

TEST_CASE("streaming matches batch on random modules") {
  Rng rng(20);
  for (int k = 0; k < 40; ++k) {
    CorpusOptions o;
    o.max_length = 16;
    o.max_dim = 5;
    o.max_bars = 20;
    o.iso_tail_probability = 0.4;
    o.contains_zero = k % 2 == 0;
    const auto spec = random_spec(rng, o);
    const auto v = gen_from_barcode(spec);
    std::vector<RefinementTree> trees;
    StreamOptions opts;
    opts.observer = [&](const RefinementTree& t, const StreamReport& r) {
      if (!r.complete) trees.push_back(t);
    };
    const auto reports = run(v, opts);
    REQUIRE(reports.back().complete);
    CHECK(reports.back().barcode == decompose_tailed(v).barcode);
    CHECK(reports.back().barcode == spec.barcode);
    for (std::size_t i = 1; i < reports.size(); ++i) {
      CHECK(reports[i - 1].finalized.subset_of(reports[i].finalized));
    }
    // Leaves direct-sum to V at every index of every window.
    for (const auto& t : trees) {
      const auto nodes = t.nodes();
      for (Index j = -t.radius; j <= t.radius; ++j) {
        const auto jj = static_cast<std::size_t>(j + t.radius);
        Matrix all(t.window.dims[jj], 0, t.window.field);
        for (const auto& n : nodes) all = hconcat(all, n.subspaces[jj].basis());
        CHECK(all.cols() == t.window.dims[jj]);
        CHECK(rank(all) == t.window.dims[jj]);
      }
    }
  }
}

TEST_CASE("window limit leaves the report incomplete") {
  const auto v = padded({-3, 5}, -3, 5);
  StreamOptions opts;
  opts.window_limit = 2;
  const auto reports = run(v, opts);
  CHECK(reports.size() == 3);
  CHECK_FALSE(reports.back().complete);
  CHECK(reports.back().pending == bars({{-2, 2}}));
}

TEST_CASE("inconsistent streams are rejected") {
  const PrimeField f2(2);
  SUBCASE("overlap disagreement") {
    std::vector<WindowYield> items(2);
    items[0].module = restrict(interval_module({0, 0}, 0, 0, f2), 0, 0);
    items[1].module = zero_module(-1, 1, f2);
    ReplayStream src(items);
    CHECK_THROWS_AS(stream_decompose(src), InvalidInput);
  }
  SUBCASE("skipped radius") {
    std::vector<WindowYield> items(2);
    items[0].module = zero_module(0, 0, f2);
    items[1].module = zero_module(-2, 2, f2);
    ReplayStream src(items);
    CHECK_THROWS_AS(stream_decompose(src), InvalidInput);
  }
  SUBCASE("stream that never ends stays incomplete") {
    std::vector<WindowYield> items(1);
    items[0].module = restrict(interval_module({0, 0}, 0, 0, f2), 0, 0);
    ReplayStream src(items);
    const auto reports = stream_decompose(src);
    CHECK(reports.size() == 1);
    CHECK_FALSE(reports.back().complete);
  }
}

TEST_CASE("pending leaves need not be stable") {
  // At radius 0 only V_0 = F^2 is known and some pair of lines must be
  // chosen. If V_{-1} then maps onto a third line, the bar through -1 lives on
  // that line at 0, so neither chosen line survives as a leaf.
  const PrimeField f2(2);
  const auto d0 = decompose_finite(module(2, 0, {2}, {}));
  const Matrix lines = inverse(d0.basis[0]);
  const Subspace l1(lines.cols_range(0, 1));
  const Subspace l2(lines.cols_range(1, 1));
  std::vector<Scalar> third = lines.col(0);
  const auto other = lines.col(1);
  for (std::size_t r = 0; r < 2; ++r) third[r] = f2.add(third[r], other[r]);
  const auto v = module(2, -1, {1, 2}, {fwd(Matrix::column(third, f2))});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RandomBasisChoice choice(seed);
    const auto d1 = decompose_finite(v, {&choice});
    REQUIRE(d1.barcode == bars({{-1, 0}, {0, 0}}));
    // Barcode order puts [-1,0] first at index 0.
    const Subspace through(inverse(d1.basis[1]).cols_range(0, 1));
    CHECK(through == Subspace(Matrix::column(third, f2)));
    CHECK_FALSE(through == l1);
    CHECK_FALSE(through == l2);
  }
}

TEST_CASE("finalized leaves stay fixed") {
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    CorpusOptions o;
    o.max_length = 12;
    o.max_dim = 4;
    o.contains_zero = true;
    const auto v = gen_from_barcode(random_spec(rng, o));
    std::vector<std::vector<RefinementNode>> history;
    StreamOptions opts;
    opts.observer = [&](const RefinementTree& t, const StreamReport& r) {
      if (r.complete) return;
      std::vector<RefinementNode> fin;
      for (auto& n : t.nodes())
        if (n.finalized) fin.push_back(std::move(n));
      history.push_back(std::move(fin));
    };
    run(v, opts);
    for (std::size_t step = 1; step < history.size(); ++step) {
      const Index shift = 1;
      for (const auto& old : history[step - 1]) {
        bool found = false;
        for (const auto& now : history[step]) {
          if (now.path != old.path) continue;
          found = true;
          CHECK(now.bar == old.bar);
          for (std::size_t j = 0; j < old.subspaces.size(); ++j) {
            CHECK(now.subspaces[j + static_cast<std::size_t>(shift)] == old.subspaces[j]);
          }
        }
        CHECK(found);
      }
    }
  }
}
