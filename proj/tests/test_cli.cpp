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

#include "cli_support.hpp"
#include "zigzag/zzm.hpp"

using namespace zztest;

namespace {

const std::string kMixedBarcode = "[-2,1]\n[-1,2]\n[0,0]\n[0,3]\n[1,2]\n";
const std::string kTailedBarcode = "[-inf,1]\n[0,+inf]\n[1,3]\n[2,2]\n";

}  // namespace

TEST_CASE("decompose prints the barcode") {
  auto r = run_cli("decompose " + data_path("sample.zzm"));
  CHECK(r.code == 0);
  CHECK(r.out == "[0,2]\n");
  r = run_cli("decompose " + data_path("block.zzm"));
  CHECK(r.out == "[0,1]\n[1,2]\n");
  r = run_cli("decompose " + data_path("mixed.zzm"));
  CHECK(r.out == kMixedBarcode);
  r = run_cli("decompose " + data_path("tailed.zzm"));
  CHECK(r.code == 0);
  CHECK(r.out == kTailedBarcode);
}

TEST_CASE("certificates verify and tampering is caught") {
  const std::string cert = temp_path("cli_cert.zzm");
  auto r = run_cli("decompose " + data_path("mixed.zzm") + " --certificate " + cert);
  REQUIRE(r.code == 0);
  CHECK(slurp(cert) == slurp(data_path("certified.zzm")));
  CHECK(run_cli("verify " + cert).out == "OK\n");
  CHECK(run_cli("verify " + data_path("certified.zzm")).code == 0);

  r = run_cli("verify " + data_path("tampered.zzm"));
  CHECK(r.code == 2);
  CHECK(r.out == "FAILED: dimension count mismatch at index 1: dim 4, bars 5\n");

  r = run_cli("verify " + data_path("block.zzm"));
  CHECK(r.code == 1);
  CHECK(r.out.find("no decomp block") != std::string::npos);
  std::remove(cert.c_str());
}

TEST_CASE("invalid input exits with 1") {
  auto r = run_cli("decompose " + data_path("bad_field.zzm"));
  CHECK(r.code == 1);
  CHECK(r.out == "error: line 2: modulus must be prime\n");
  CHECK(run_cli("decompose /nonexistent.zzm").code == 1);
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("gen --barcode '[2,1]'").code == 1);
  CHECK(run_cli("gen --barcode '[0,1]' --field 4").code == 1);
  CHECK(run_cli("gen --barcode '[0,1]' --orientation fx").code == 1);
  CHECK(run_cli("stream " + data_path("sample.zzm") + " --window-limit -1").code == 1);
}

TEST_CASE("emit is byte-stable on the data files") {
  for (const char* name : {"sample.zzm", "block.zzm", "tailed.zzm", "mixed.zzm", "certified.zzm"}) {
    const std::string text = slurp(data_path(name));
    CHECK(zigzag::emit_zzm(zigzag::parse_zzm(text)) == text);
  }
}

TEST_CASE("gen reproduces the data files") {
  auto r = run_cli("gen --barcode '[0,1] [1,2]' --identity");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data_path("block.zzm")));
  r = run_cli("gen --barcode '[-inf,1] [0,+inf] [1,3] [2,2]' --field 3 --seed 7 --window -1 4");
  CHECK(r.out == slurp(data_path("tailed.zzm")));
  r = run_cli("gen --barcode '[-2,1] [0,0] [0,3] [1,2] [-1,2]' --field 5 --seed 11 --orientation fbbff");
  CHECK(r.out == slurp(data_path("mixed.zzm")));

  const std::string out = temp_path("cli_gen.zzm");
  r = run_cli("gen --barcode '[0,3] x2 [1,1]' --field 101 --seed 3 --echo -o " + out);
  CHECK(r.out == "[0,3] x2\n[1,1]\n");
  CHECK(run_cli("decompose " + out).out == "[0,3] x2\n[1,1]\n");
  std::remove(out.c_str());
}

TEST_CASE("stream agrees with decompose") {
  auto r = run_cli("stream " + data_path("tailed.zzm"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# k=0 finalized {} pending {[0,0] [0,0]}\n", 0) == 0);
  CHECK(r.out.find("# k=4 finalized {[1,3] [2,2]} pending {[-4,1] [0,4]}\n") != std::string::npos);
  REQUIRE(r.out.size() >= kTailedBarcode.size());
  CHECK(r.out.substr(r.out.size() - kTailedBarcode.size()) == kTailedBarcode);

  r = run_cli("stream " + data_path("mixed.zzm"));
  CHECK(r.out.substr(r.out.size() - kMixedBarcode.size()) == kMixedBarcode);

  r = run_cli("stream " + data_path("tailed.zzm") + " --window-limit 1");
  CHECK(r.out ==
        "# k=0 finalized {} pending {[0,0] [0,0]}\n"
        "# k=1 finalized {} pending {[-1,1] [0,1] [1,1]}\n"
        "# incomplete\n");
}

TEST_CASE("render") {
  CHECK(run_cli("render " + data_path("certified.zzm")).out == kMixedBarcode);
  const auto r = run_cli("render " + data_path("tailed.zzm") + " --svg -");
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("<polygon") != std::string::npos);
}
