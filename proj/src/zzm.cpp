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

#include "zigzag/zzm.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace zigzag {

ZzmError::ZzmError(std::size_t line, const std::string& message)
    : InvalidInput("line " + std::to_string(line) + ": " + message), line_(line), message_(message) {}

bool ZzmDocument::operator==(const ZzmDocument& o) const {
  if (!(module == o.module) || certificate.has_value() != o.certificate.has_value()) return false;
  if (!certificate) return true;
  return certificate->barcode == o.certificate->barcode && certificate->basis == o.certificate->basis;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::optional<std::int64_t> to_int(std::string_view w) {
  if (!w.empty() && w.front() == '+') w.remove_prefix(1);
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || p != w.data() + w.size()) return std::nullopt;
  return v;
}

std::optional<Index> to_endpoint(std::string_view w, bool low) {
  if (low && w == "-inf") return kNegInf;
  if (!low && (w == "+inf" || w == "inf")) return kPosInf;
  auto v = to_int(w);
  if (v && (*v == kNegInf || *v == kPosInf)) return std::nullopt;
  return v;
}

class Parser {
 public:
  ZzmDocument run(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      ++line_;
      std::string_view l = text.substr(pos, nl - pos);
      if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
      const auto words = split_words(l);
      if (!words.empty()) statement(words);
      pos = nl + 1;
    }
    if (line_ == 0) line_ = 1;
    return finish();
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ZzmError(line_, msg); }

  std::int64_t integer(std::string_view w, const char* what) const {
    auto v = to_int(w);
    if (!v) fail(std::string("expected an integer for ") + what + ", got '" + std::string(w) + "'");
    return *v;
  }

  std::size_t count(std::string_view w, const char* what) const {
    const auto v = integer(w, what);
    if (v < 0) fail(std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(v);
  }

  void arity(const std::vector<std::string_view>& w, std::size_t n) const {
    if (w.size() != n) {
      fail("'" + std::string(w[0]) + "' takes " + std::to_string(n - 1) + " values, got " +
           std::to_string(w.size() - 1));
    }
  }

  void need_shape(const char* what) const {
    if (!field_) fail(std::string(what) + " before 'field'");
    if (!window_) fail(std::string(what) + " before 'window'");
    if (!dims_) fail(std::string(what) + " before 'dims'");
  }

  Index index_in_window(std::string_view w, Index last) const {
    const Index i = integer(w, "index");
    if (i < window_->first || i > last) fail("index " + std::to_string(i) + " outside the window");
    return i;
  }

  std::size_t dim_at(Index i) const { return (*dims_)[static_cast<std::size_t>(i - window_->first)]; }

  Matrix entries(const std::vector<std::string_view>& w, std::size_t first, std::size_t r,
                 std::size_t c, const std::string& what) const {
    if (w.size() - first != r * c) {
      fail(what + ": expected " + std::to_string(r * c) + " entries, got " +
           std::to_string(w.size() - first));
    }
    Matrix m(r, c, *field_);
    for (std::size_t k = 0; k < r * c; ++k) m.set(k / c, k % c, integer(w[first + k], "entry"));
    return m;
  }

  void statement(const std::vector<std::string_view>& w) {
    const std::string_view key = w[0];
    if (!header_) {
      if (key != "zzm" || w.size() != 2 || w[1] != "1") fail("expected header 'zzm 1'");
      header_ = true;
      return;
    }
    if (key == "field") {
      arity(w, 2);
      if (field_) fail("duplicate 'field'");
      const auto p = integer(w[1], "field");
      if (p < 2 || p >= static_cast<std::int64_t>(PrimeField::kMaxModulus) ||
          !is_prime(static_cast<std::uint64_t>(p))) {
        fail("modulus must be prime");
      }
      field_ = PrimeField(static_cast<std::uint32_t>(p));
    } else if (key == "window") {
      arity(w, 3);
      if (window_) fail("duplicate 'window'");
      const Index s = integer(w[1], "window start");
      const Index t = integer(w[2], "window end");
      if (s > t) fail("window start after end");
      if (t - s > 1000000) fail("window too long");
      window_ = {s, t};
    } else if (key == "dims") {
      if (!window_) fail("'dims' before 'window'");
      if (dims_) fail("duplicate 'dims'");
      const auto n = static_cast<std::size_t>(window_->second - window_->first + 1);
      if (w.size() - 1 != n) {
        fail("dims: expected " + std::to_string(n) + " values, got " + std::to_string(w.size() - 1));
      }
      std::vector<std::size_t> d;
      for (std::size_t k = 1; k < w.size(); ++k) d.push_back(count(w[k], "dimension"));
      dims_ = std::move(d);
    } else if (key == "edge") {
      need_shape("'edge'");
      if (decomp_) fail("'edge' inside the decomp block");
      if (w.size() < 5) fail("edge: expected '<i> <f|b> <r> <c> entries'");
      const Index i = index_in_window(w[1], window_->second - 1);
      if (edges_.count(i)) fail("duplicate edge " + std::to_string(i));
      Direction dir;
      if (w[2] == "f") {
        dir = Direction::Forward;
      } else if (w[2] == "b") {
        dir = Direction::Backward;
      } else {
        fail("edge " + std::to_string(i) + ": direction must be 'f' or 'b'");
      }
      const std::size_t r = count(w[3], "rows");
      const std::size_t c = count(w[4], "cols");
      const std::size_t er = dir == Direction::Forward ? dim_at(i + 1) : dim_at(i);
      const std::size_t ec = dir == Direction::Forward ? dim_at(i) : dim_at(i + 1);
      if (r != er || c != ec) {
        fail("edge " + std::to_string(i) + ": expected " + std::to_string(er) + "x" +
             std::to_string(ec) + ", got " + std::to_string(r) + "x" + std::to_string(c));
      }
      edges_[i] = {dir, entries(w, 5, r, c, "edge " + std::to_string(i))};
    } else if (key == "tail") {
      arity(w, 3);
      Tail t;
      if (w[2] == "zero") {
        t = Tail::Zero;
      } else if (w[2] == "iso") {
        t = Tail::Iso;
      } else {
        fail("unknown tail keyword '" + std::string(w[2]) + "'");
      }
      if (w[1] == "left") {
        if (left_) fail("duplicate left tail");
        left_ = t;
      } else if (w[1] == "right") {
        if (right_) fail("duplicate right tail");
        right_ = t;
      } else {
        fail("tail side must be 'left' or 'right'");
      }
    } else if (key == "decomp") {
      arity(w, 1);
      need_shape("'decomp'");
      if (decomp_) fail("duplicate 'decomp'");
      decomp_ = true;
    } else if (key == "bar") {
      if (!decomp_) fail("'bar' outside a decomp block");
      arity(w, 3);
      const auto lo = to_endpoint(w[1], true);
      const auto hi = to_endpoint(w[2], false);
      if (!lo || !hi) fail("bad bar endpoints");
      try {
        bars_.emplace_back(*lo, *hi);
      } catch (const InvalidInput& e) {
        fail(e.what());
      }
    } else if (key == "basis") {
      if (!decomp_) fail("'basis' outside a decomp block");
      if (w.size() < 4) fail("basis: expected '<i> <n> <n> entries'");
      const Index i = index_in_window(w[1], window_->second);
      if (basis_.count(i)) fail("duplicate basis " + std::to_string(i));
      const std::size_t r = count(w[2], "rows");
      const std::size_t c = count(w[3], "cols");
      if (r != dim_at(i) || c != dim_at(i)) {
        fail("basis " + std::to_string(i) + ": expected " + std::to_string(dim_at(i)) + "x" +
             std::to_string(dim_at(i)));
      }
      basis_[i] = entries(w, 4, r, c, "basis " + std::to_string(i));
    } else {
      fail("unknown keyword '" + std::string(key) + "'");
    }
  }

  ZzmDocument finish() {
    if (!header_) fail("empty document");
    need_shape("end of document");
    ZzmDocument doc;
    ZigzagModule& m = doc.module;
    m.field = *field_;
    m.start = window_->first;
    m.dims = *dims_;
    for (Index i = window_->first; i < window_->second; ++i) {
      auto it = edges_.find(i);
      if (it == edges_.end()) fail("missing edge " + std::to_string(i));
      m.edges.push_back(std::move(it->second));
    }
    m.left_tail = left_.value_or(Tail::Zero);
    m.right_tail = right_.value_or(Tail::Zero);
    if (auto r = validate(m); !r) fail(r.error);
    if (decomp_) {
      Certificate c;
      c.barcode = Barcode(bars_);
      for (Index i = window_->first; i <= window_->second; ++i) {
        auto it = basis_.find(i);
        if (it == basis_.end()) fail("missing basis " + std::to_string(i));
        c.basis.push_back(std::move(it->second));
      }
      doc.certificate = std::move(c);
    }
    return doc;
  }

  std::size_t line_ = 0;
  bool header_ = false;
  std::optional<PrimeField> field_;
  std::optional<std::pair<Index, Index>> window_;
  std::optional<std::vector<std::size_t>> dims_;
  std::map<Index, EdgeMap> edges_;
  std::optional<Tail> left_, right_;
  bool decomp_ = false;
  std::vector<Interval> bars_;
  std::map<Index, Matrix> basis_;
};

void put_entries(std::ostringstream& os, const Matrix& m) {
  for (auto v : m.data()) os << ' ' << v;
}

const char* tail_word(Tail t) { return t == Tail::Iso ? "iso" : "zero"; }

}  // namespace

ZzmDocument parse_zzm(std::string_view text) { return Parser().run(text); }

ZzmDocument read_zzm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_zzm(ss.str());
}

std::string emit_zzm(const ZzmDocument& doc) {
  const ZigzagModule& m = doc.module;
  std::ostringstream os;
  os << "zzm 1\n";
  os << "field " << m.field.modulus() << '\n';
  os << "window " << m.start << ' ' << m.end() << '\n';
  os << "dims";
  for (auto d : m.dims) os << ' ' << d;
  os << '\n';
  for (std::size_t k = 0; k < m.edges.size(); ++k) {
    const auto& e = m.edges[k];
    os << "edge " << m.start + static_cast<Index>(k) << ' '
       << (e.direction == Direction::Forward ? 'f' : 'b') << ' ' << e.matrix.rows() << ' '
       << e.matrix.cols();
    put_entries(os, e.matrix);
    os << '\n';
  }
  os << "tail left " << tail_word(m.left_tail) << '\n';
  os << "tail right " << tail_word(m.right_tail) << '\n';
  if (doc.certificate) {
    os << "decomp\n";
    for (const auto& iv : doc.certificate->barcode) {
      os << "bar " << endpoint_to_string(iv.lo) << ' ' << endpoint_to_string(iv.hi) << '\n';
    }
    for (std::size_t k = 0; k < doc.certificate->basis.size(); ++k) {
      const Matrix& b = doc.certificate->basis[k];
      os << "basis " << m.start + static_cast<Index>(k) << ' ' << b.rows() << ' ' << b.cols();
      put_entries(os, b);
      os << '\n';
    }
  }
  return os.str();
}

Certificate to_certificate(const Decomposition& d) { return {d.barcode, d.basis}; }

Decomposition to_decomposition(const ZigzagModule& v, const Certificate& c) {
  Decomposition d;
  d.barcode = c.barcode;
  d.basis = c.basis;
  d.normal_form = normal_form_module(c.barcode, v.start, v.end(), v.field, v.directions(),
                                     v.left_tail, v.right_tail);
  return d;
}

Barcode parse_barcode(std::string_view text) {
  std::vector<Interval> bars;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == ';' ||
                               text[i] == '\t' || text[i] == '\n' || text[i] == '{' || text[i] == '}')) {
      ++i;
    }
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '[') throw InvalidInput("barcode: expected '[' at offset " + std::to_string(i));
    const std::size_t close = text.find(']', i);
    if (close == std::string_view::npos) throw InvalidInput("barcode: unterminated bar");
    const std::string_view body = text.substr(i + 1, close - i - 1);
    const std::size_t comma = body.find(',');
    if (comma == std::string_view::npos) throw InvalidInput("barcode: bar needs two endpoints");
    const auto lo = to_endpoint(trim(body.substr(0, comma)), true);
    const auto hi = to_endpoint(trim(body.substr(comma + 1)), false);
    if (!lo || !hi) throw InvalidInput("barcode: bad endpoint in [" + std::string(body) + "]");
    const Interval iv(*lo, *hi);
    i = close + 1;
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t copies = 1;
    if (i < text.size() && text[i] == 'x') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      const auto n = to_int(text.substr(i + 1, j - i - 1));
      if (!n || *n < 1) throw InvalidInput("barcode: bad multiplicity");
      copies = static_cast<std::size_t>(*n);
      i = j;
    }
    for (std::size_t c = 0; c < copies; ++c) bars.push_back(iv);
    skip();
  }
  return Barcode(std::move(bars));
}

}  // namespace zigzag
