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

#include "zigzag/render.hpp"

#include <algorithm>
#include <sstream>

namespace zigzag {

std::string render_text(const Barcode& b) {
  std::string out;
  for (const auto& [iv, n] : b.grouped()) {
    if (!out.empty()) out += '\n';
    out += to_string(iv);
    if (n > 1) out += " x" + std::to_string(n);
  }
  return out;
}

namespace {

constexpr double kMargin = 40.0;
constexpr double kUnit = 24.0;
constexpr double kRow = 14.0;
constexpr double kBarHeight = 8.0;
constexpr double kOverhang = 1.5;  // units drawn past the last finite index

}  // namespace

std::string render_svg(const Barcode& b) {
  Index lo = 0;
  Index hi = 0;
  bool any = false;
  for (const auto& iv : b) {
    for (Index e : {iv.lo, iv.hi}) {
      if (e == kNegInf || e == kPosInf) continue;
      lo = any ? std::min(lo, e) : e;
      hi = any ? std::max(hi, e) : e;
      any = true;
    }
  }
  const double left = static_cast<double>(lo) - kOverhang;
  const double right = static_cast<double>(hi) + kOverhang;
  const double width = 2 * kMargin + (right - left) * kUnit;
  const double height = 2 * kMargin + static_cast<double>(b.size()) * kRow + kRow;
  auto x_of = [&](double i) { return kMargin + (i - left) * kUnit; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<style>.bar{fill:#2b6cb0}.arrow{fill:#2b6cb0}.axis{stroke:#333;stroke-width:1}"
        "text{font:10px sans-serif;text-anchor:middle}</style>\n";

  std::size_t row = 0;
  for (const auto& iv : b) {
    const double y = kMargin + static_cast<double>(row++) * kRow;
    const double x0 = iv.left_infinite() ? x_of(left) : x_of(static_cast<double>(iv.lo) - 0.4);
    const double x1 = iv.right_infinite() ? x_of(right) : x_of(static_cast<double>(iv.hi) + 0.4);
    os << "<rect class=\"bar\" x=\"" << x0 << "\" y=\"" << y << "\" width=\"" << (x1 - x0)
       << "\" height=\"" << kBarHeight << "\"><title>" << to_string(iv) << "</title></rect>\n";
    const double mid = y + kBarHeight / 2;
    if (iv.left_infinite()) {
      os << "<polygon class=\"arrow\" points=\"" << x0 - 8 << ',' << mid << ' ' << x0 << ','
         << y - 2 << ' ' << x0 << ',' << y + kBarHeight + 2 << "\"/>\n";
    }
    if (iv.right_infinite()) {
      os << "<polygon class=\"arrow\" points=\"" << x1 + 8 << ',' << mid << ' ' << x1 << ','
         << y - 2 << ' ' << x1 << ',' << y + kBarHeight + 2 << "\"/>\n";
    }
  }

  const double axis_y = kMargin + static_cast<double>(b.size()) * kRow + kRow / 2;
  os << "<line class=\"axis\" x1=\"" << x_of(left) << "\" y1=\"" << axis_y << "\" x2=\""
     << x_of(right) << "\" y2=\"" << axis_y << "\"/>\n";
  for (Index i = lo; i <= hi; ++i) {
    const double x = x_of(static_cast<double>(i));
    os << "<line class=\"axis\" x1=\"" << x << "\" y1=\"" << axis_y << "\" x2=\"" << x
       << "\" y2=\"" << axis_y + 4 << "\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << axis_y + 16 << "\">" << i << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace zigzag
