/*
 * Copyright 2026 The mscc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace mscc::ff {

/// A symbol of GF(2^m), stored in the low m bits.
using Element = std::uint32_t;

/// Irreducible polynomial of degree m from the built-in table (1 <= m <= 32).
/// Bit i of the result is the coefficient of x^i.
std::uint64_t default_polynomial(unsigned m);

/// Rabin's test over GF(2)[x]. Degree is taken from the highest set bit.
bool is_irreducible(std::uint64_t poly);

/// Defines GF(2^m) through its reduction polynomial.
struct FieldSpec {
  unsigned m = 16;
  std::uint64_t reduction_polynomial = 0x1100B;

  static FieldSpec with_width(unsigned m) { return {m, default_polynomial(m)}; }
};

/// Arithmetic context for GF(2^m). Immutable after construction and cheap to
/// share; widths up to 16 bits use log/antilog tables, wider fields use
/// carryless shift-and-reduce.
class Field {
 public:
  explicit Field(FieldSpec spec = {});
  explicit Field(unsigned m) : Field(FieldSpec::with_width(m)) {}

  unsigned width() const noexcept { return spec_.m; }
  std::uint64_t polynomial() const noexcept { return spec_.reduction_polynomial; }
  /// Field order q = 2^m.
  std::uint64_t order() const noexcept { return std::uint64_t{1} << spec_.m; }
  Element mask() const noexcept { return static_cast<Element>(order() - 1); }
  bool contains(Element a) const noexcept { return (std::uint64_t{a} >> spec_.m) == 0; }

  static Element add(Element a, Element b) noexcept { return a ^ b; }
  static Element sub(Element a, Element b) noexcept { return a ^ b; }

  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!tables_) return mul_slow(a, b);
    return exp_[log_[a] + log_[b]];
  }

  /// Throws Error(ZeroInverse) for a == 0.
  Element inverse(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inverse(b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Reference multiply by polynomial product and reduction; no tables.
  Element mul_slow(Element a, Element b) const noexcept;

 private:
  FieldSpec spec_;
  bool tables_ = false;
  std::vector<std::uint32_t> log_;
  // Doubled antilog table so log_[a] + log_[b] needs no modular reduction.
  std::vector<Element> exp_;
};

}  // namespace mscc::ff
