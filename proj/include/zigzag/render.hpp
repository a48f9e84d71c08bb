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

#ifndef ZIGZAG_RENDER_HPP
#define ZIGZAG_RENDER_HPP

#include <string>

#include "zigzag/module.hpp"

namespace zigzag {

/// One line per distinct bar in barcode order, repeats collapsed as `xN`.
/// No trailing newline; empty for the empty barcode.
std::string render_text(const Barcode& b);

/// SVG 1.1 document with one <rect class="bar"> per bar (repeats drawn
/// separately), an index axis, and arrowheads on infinite ends.
std::string render_svg(const Barcode& b);

}  // namespace zigzag

#endif  // ZIGZAG_RENDER_HPP
