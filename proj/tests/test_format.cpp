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
#include "zigzag/render.hpp"
#include "zigzag/zzm.hpp"

using namespace zztest;

namespace {

const char* kSample =
    "zzm 1\n"
    "field 2\n"
    "window 0 2\n"
    "dims 1 1 1\n"
    "edge 0 f 1 1 1\n"
    "edge 1 b 1 1 1\n"
    "tail left zero\n"
    "tail right zero\n";

std::string error_of(const std::string& text) {
  try {
    parse_zzm(text);
  } catch (const ZzmError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse the sample document") {
  const auto doc = parse_zzm(kSample);
  CHECK(doc.module == interval_module({0, 2}, 0, 2, PrimeField(2)));
  CHECK_FALSE(doc.certificate.has_value());
  CHECK(emit_zzm(doc) == kSample);
}

TEST_CASE("comments, blank lines and default tails") {
  const auto doc = parse_zzm(
      "# a comment\n\nzzm 1\nfield 3   # trailing\nwindow -1 0\ndims 2 1\nedge -1 f 1 2  1 2\n");
  CHECK(doc.module.start == -1);
  CHECK(doc.module.left_tail == Tail::Zero);
  CHECK(doc.module.edges[0].matrix == M({{1, 2}}, 3));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_of("zzm 1\nfield 4\n") == "line 2: modulus must be prime");
  CHECK(error_of("zzm 2\n") == "line 1: expected header 'zzm 1'");
  CHECK(error_of("zzm 1\nfield 2\nwindow 0 1\ndims 1 1\nedge 0 f 1 1 1\nedge 0 f 1 1 1\n") ==
        "line 6: duplicate edge 0");
  CHECK(error_of("zzm 1\nfield 2\nwindow 0 2\ndims 1 1 1\nedge 0 f 1 1 1\n") ==
        "line 5: missing edge 1");
  CHECK(error_of("zzm 1\nfield 2\nwindow 0 1\ndims 1 2\nedge 0 f 1 1 1\n") ==
        "line 5: edge 0: expected 2x1, got 1x1");
  CHECK(error_of("zzm 1\nfield 2\nwindow 0 0\ndims 1\ntail left maybe\n") ==
        "line 5: unknown tail keyword 'maybe'");
  CHECK(error_of("zzm 1\nfield 2\nwindow 0 0\ndims 1\nfoo\n") == "line 5: unknown keyword 'foo'");
  CHECK(error_of("zzm 1\nfield 2\nwindow 0 1\ndims 1\n") == "line 4: dims: expected 2 values, got 1");
  CHECK(error_of("zzm 1\nfield 2\nwindow 0 0\ndims 1\nbar 0 0\n") ==
        "line 5: 'bar' outside a decomp block");
  CHECK(error_of("zzm 1\nfield 2\nwindow 0 0\ndims 1\ndecomp\nbar 0 0\n") ==
        "line 6: missing basis 0");
  CHECK(error_of("zzm 1\nfield 2\nwindow 0 0\ndims 1\ndecomp\nbar 1 0\nbasis 0 1 1 1\n")
            .find("line 6:") == 0);
  CHECK(error_of("") == "line 1: empty document");
  CHECK_THROWS_AS(read_zzm_file("/nonexistent/file.zzm"), InvalidInput);
}

TEST_CASE("emit then parse is the identity on a generated corpus") {
  Rng rng(50);
  for (int k = 0; k < 100; ++k) {
    CorpusOptions o;
    o.iso_tail_probability = 0.3;
    o.fields = {2, 3, 101, 65521};
    const auto v = gen_from_barcode(random_spec(rng, o));
    ZzmDocument doc{v, std::nullopt};
    if (k % 2 == 0) doc.certificate = to_certificate(decompose_tailed(v));
    const std::string text = emit_zzm(doc);
    const auto back = parse_zzm(text);
    CHECK(back == doc);
    CHECK(emit_zzm(back) == text);
    if (back.certificate) {
      CHECK(verify_decomposition(v, to_decomposition(v, *back.certificate)).ok());
    }
  }
}

TEST_CASE("barcode text") {
  CHECK(parse_barcode("[0,1] [1,2]") == bars({{0, 1}, {1, 2}}));
  CHECK(parse_barcode("{[-inf,3] x2, [0, +inf]}") == bars({{kNegInf, 3}, {kNegInf, 3}, {0, kPosInf}}));
  CHECK(parse_barcode("").empty());
  CHECK_THROWS_AS(parse_barcode("[2,1]"), InvalidInput);
  CHECK_THROWS_AS(parse_barcode("[0 1]"), InvalidInput);
  CHECK_THROWS_AS(parse_barcode("[0,1] x0"), InvalidInput);

  CHECK(render_text(bars({{0, 1}, {1, 2}})) == "[0,1]\n[1,2]");
  CHECK(render_text(bars({{kNegInf, 3}, {kNegInf, 3}})) == "[-inf,3] x2");
  CHECK(render_text({}).empty());
  for (const auto* s : {"[0,1]\n[1,2]", "[-inf,3] x2\n[0,+inf]"}) {
    CHECK(render_text(parse_barcode(s)) == s);
  }
}

TEST_CASE("svg output") {
  const auto svg = render_svg(bars({{0, 1}, {1, 2}, {kNegInf, 0}, {kNegInf, 0}}));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t rects = 0;
  for (auto p = svg.find("class=\"bar\""); p != std::string::npos; p = svg.find("class=\"bar\"", p + 1))
    ++rects;
  CHECK(rects == 4);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(render_svg({}).find("class=\"bar\"") == std::string::npos);
}
