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

#ifndef ZIGZAG_ZZM_HPP
#define ZIGZAG_ZZM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/decompose.hpp"

namespace zigzag {

/// Parse failure. what() reads "line N: message".
class ZzmError : public InvalidInput {
 public:
  ZzmError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Bars and basis matrices as stored in a `decomp` block.
struct Certificate {
  Barcode barcode;
  std::vector<Matrix> basis;
};

struct ZzmDocument {
  ZigzagModule module;
  std::optional<Certificate> certificate;
  bool operator==(const ZzmDocument&) const;
};

/// Reads ZZM v1:
///
///   zzm 1
///   field <p>
///   window <s> <t>
///   dims <d_s> ... <d_t>
///   edge <i> <f|b> <r> <c> <r*c entries>     one per i in [s, t-1]
///   tail left <zero|iso>
///   tail right <zero|iso>
///   decomp                                   optional, then:
///   bar <a|-inf> <b|+inf>
///   basis <i> <n> <n> <n*n entries>          one per window index
///
/// `#` starts a comment. Entries are reduced mod p. Missing tails are zero.
ZzmDocument parse_zzm(std::string_view text);
ZzmDocument read_zzm_file(const std::string& path);

/// Canonical emission: the order above, reduced entries, single spaces.
std::string emit_zzm(const ZzmDocument& doc);

/// Attaches a certificate to a module.
Certificate to_certificate(const Decomposition& d);
/// Rebuilds the normal form from the module's orientation and tails. Throws
/// InvalidInput when a bar misses the window.
Decomposition to_decomposition(const ZigzagModule& v, const Certificate& c);

/// Reads `[a,b]` lists such as "[0,1] [1,2]" or "[-inf,3],[0,+inf]"; an
/// optional `xN` after a bar repeats it.
Barcode parse_barcode(std::string_view text);

}  // namespace zigzag

#endif  // ZIGZAG_ZZM_HPP
