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

// zzdecomp: decompose, verify, stream and generate zigzag modules stored in
// ZZM v1 files.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure,
// 3 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/oracle.hpp"
#include "zigzag/refine.hpp"
#include "zigzag/render.hpp"
#include "zigzag/zzm.hpp"

namespace {

using namespace zigzag;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kVerifyFailed = 2;
constexpr int kInternal = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << content;
  if (!out) throw InvalidInput("failed writing " + path);
}

void print_barcode(const Barcode& b) {
  const std::string text = render_text(b);
  if (!text.empty()) std::cout << text << '\n';
}

int cmd_decompose(const std::string& file, const std::string& svg, const std::string& cert) {
  ZzmDocument doc = read_zzm_file(file);
  const Decomposition d = decompose_tailed(doc.module);
  print_barcode(d.barcode);
  if (!svg.empty()) write_file(svg, render_svg(d.barcode));
  if (!cert.empty()) {
    doc.certificate = to_certificate(d);
    write_file(cert, emit_zzm(doc));
  }
  return kOk;
}

int cmd_verify(const std::string& file) {
  const ZzmDocument doc = read_zzm_file(file);
  if (!doc.certificate) throw InvalidInput(file + ": no decomp block to verify");
  Decomposition d;
  try {
    d = to_decomposition(doc.module, *doc.certificate);
  } catch (const InvalidInput& e) {
    std::cout << "FAILED: " << check_name(VerifyCheck::NormalForm) << ": " << e.what() << '\n';
    return kVerifyFailed;
  }
  const VerifyReport r = verify_decomposition(doc.module, d);
  if (!r.ok()) {
    std::cout << "FAILED: " << r.message << '\n';
    return kVerifyFailed;
  }
  std::cout << "OK\n";
  return kOk;
}

int cmd_stream(const std::string& file, std::optional<Index> limit) {
  const ZzmDocument doc = read_zzm_file(file);
  ModuleStream src(doc.module);
  StreamOptions opts;
  opts.window_limit = limit;
  const auto reports = stream_decompose(src, opts);
  for (const auto& r : reports) {
    if (r.complete) break;
    std::cout << "# k=" << r.radius << " finalized " << to_string(r.finalized) << " pending "
              << to_string(r.pending) << '\n';
  }
  if (!reports.empty() && reports.back().complete) {
    print_barcode(reports.back().barcode);
  } else {
    std::cout << "# incomplete\n";
  }
  return kOk;
}

struct GenArgs {
  std::string barcode;
  std::uint64_t seed = 0;
  std::uint32_t field = 2;
  std::string out;
  std::vector<Index> window;
  std::string orientation;
  bool identity = false;
  bool echo = false;
};

int cmd_gen(const GenArgs& a) {
  GenSpec spec;
  spec.barcode = parse_barcode(a.barcode);
  spec.seed = a.seed;
  spec.modulus = a.field;
  spec.conjugate = !a.identity;
  bool any = false;
  for (const auto& iv : spec.barcode) {
    if (iv.left_infinite()) spec.left_tail = Tail::Iso;
    if (iv.right_infinite()) spec.right_tail = Tail::Iso;
    for (Index e : {iv.lo, iv.hi}) {
      if (e == kNegInf || e == kPosInf) continue;
      spec.s = any ? std::min(spec.s, e) : e;
      spec.t = any ? std::max(spec.t, e) : e;
      any = true;
    }
  }
  if (!a.window.empty()) {
    spec.s = a.window[0];
    spec.t = a.window[1];
  }
  for (char c : a.orientation) {
    if (c != 'f' && c != 'b') throw InvalidInput("orientation may only contain 'f' and 'b'");
    spec.directions.push_back(c == 'f' ? Direction::Forward : Direction::Backward);
  }
  ZzmDocument doc;
  doc.module = gen_from_barcode(spec);
  const std::string text = emit_zzm(doc);
  if (a.out.empty() || a.out == "-") {
    std::cout << text;
  } else {
    write_file(a.out, text);
  }
  if (a.echo) print_barcode(spec.barcode);
  return kOk;
}

int cmd_render(const std::string& file, const std::string& svg) {
  const ZzmDocument doc = read_zzm_file(file);
  const Barcode b = doc.certificate ? doc.certificate->barcode : decompose_tailed(doc.module).barcode;
  if (svg.empty()) {
    print_barcode(b);
  } else if (svg == "-") {
    std::cout << render_svg(b);
  } else {
    write_file(svg, render_svg(b));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval decomposition of zigzag persistence modules over prime fields"};
  app.require_subcommand(1);

  std::string file, svg, cert;
  auto* decompose = app.add_subcommand("decompose", "Print the barcode of a module");
  decompose->add_option("file", file, "ZZM file")->required();
  decompose->add_option("--svg", svg, "Also write the barcode as SVG");
  decompose->add_option("--certificate", cert, "Write the module with its decomposition");

  auto* verify = app.add_subcommand("verify", "Check an embedded decomposition");
  verify->add_option("file", file, "ZZM file with a decomp block")->required();

  std::optional<Index> limit;
  auto* stream = app.add_subcommand("stream", "Decompose window by window around 0");
  stream->add_option("file", file, "ZZM file")->required();
  stream->add_option("--window-limit", limit, "Largest radius to consume")->check(CLI::NonNegativeNumber);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a module with a given barcode");
  gen->add_option("--barcode", gen_args.barcode, "Bars, e.g. \"[0,1] [1,2]\"")->required();
  gen->add_option("--seed", gen_args.seed, "Seed of the random base change");
  gen->add_option("--field", gen_args.field, "Prime modulus");
  gen->add_option("-o,--output", gen_args.out, "Output file (stdout if omitted)");
  gen->add_option("--window", gen_args.window, "Window start and end")->expected(2);
  gen->add_option("--orientation", gen_args.orientation, "One of f/b per edge");
  gen->add_flag("--identity", gen_args.identity, "Skip the random base change");
  gen->add_flag("--echo", gen_args.echo, "Print the barcode");

  auto* render = app.add_subcommand("render", "Render a barcode as text or SVG");
  render->add_option("file", file, "ZZM file")->required();
  render->add_option("--svg", svg, "SVG output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*decompose) return cmd_decompose(file, svg, cert);
    if (*verify) return cmd_verify(file);
    if (*stream) return cmd_stream(file, limit);
    if (*gen) return cmd_gen(gen_args);
    if (*render) return cmd_render(file, svg);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInvalid;
}
