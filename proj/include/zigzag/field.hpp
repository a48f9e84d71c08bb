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

#ifndef ZIGZAG_FIELD_HPP
#define ZIGZAG_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zigzag {

using Scalar = std::uint32_t;

/// Raised for malformed user input (bad shapes, non-prime moduli, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails. Always an engine bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a prime 2 <= p < 2^16. Residues are kept in [0, p).
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t modulus() const { return p_; }

  Scalar reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Scalar>(r < 0 ? r + m : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    const Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace zigzag

#endif  // ZIGZAG_FIELD_HPP
