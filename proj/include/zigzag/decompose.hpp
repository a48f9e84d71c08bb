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

#ifndef ZIGZAG_DECOMPOSE_HPP
#define ZIGZAG_DECOMPOSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "zigzag/module.hpp"

namespace zigzag {

/// Hook for replacing freshly chosen basis vectors by other valid choices.
/// The engine passes `fresh` (new basis columns) and `slack` (columns whose
/// addition to any fresh column keeps it valid). When `mixable` is set the
/// fresh columns may also be recombined among themselves by any invertible
/// matrix. The default engine keeps `fresh` as is.
class BasisChoice {
 public:
  virtual ~BasisChoice() = default;
  virtual Matrix choose(const Matrix& fresh, const Matrix& slack, bool mixable) = 0;
};

struct DecomposeOptions {
  BasisChoice* choice = nullptr;
};

/// An isomorphism from a module to a direct sum of interval modules.
/// basis[k] is phi at index start + k: it maps V's coordinates to the
/// normal-form coordinates, whose columns are the bars alive there in barcode
/// order.
struct Decomposition {
  Barcode barcode;
  std::vector<Matrix> basis;
  ZigzagModule normal_form;
};

/// The direct sum of the barcode's interval modules on [s, t], laid out in
/// barcode order at every index. Bars are clipped to the window; a bar that
/// misses the window is an error.
ZigzagModule normal_form_module(const Barcode& barcode, Index s, Index t,
                                PrimeField field,
                                const std::vector<Direction>& directions,
                                Tail left, Tail right);

/// Interval decomposition of a module with Zero tails, any orientation.
/// The result is checked with verify_decomposition before it is returned.
Decomposition decompose_finite(const ZigzagModule& v, const DecomposeOptions& options = {});

/// Decomposes the stored window, then sends bars touching an Iso side to the
/// matching infinity. Accepts finite modules too.
Decomposition decompose_tailed(const ZigzagModule& v, const DecomposeOptions& options = {});

enum class VerifyCheck {
  Ok,
  BasisShape,
  BasisSingular,
  DimensionCount,
  SquareMismatch,
  NormalForm,
};

std::string_view check_name(VerifyCheck c);

struct VerifyReport {
  VerifyCheck check = VerifyCheck::Ok;
  Index index = 0;
  std::string message;
  bool ok() const { return check == VerifyCheck::Ok; }
};

/// Checks, in this order: every basis matrix is square of size dim V_i and
/// invertible; dim V_i equals the number of bars containing i; every
/// commuting square holds exactly; the normal form is the interval pattern of
/// the barcode (including tail consistency of infinite bars).
VerifyReport verify_decomposition(const ZigzagModule& v, const Decomposition& d);

}  // namespace zigzag

#endif  // ZIGZAG_DECOMPOSE_HPP
