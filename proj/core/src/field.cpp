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

#include "mscc/field.hpp"

#include "mscc/errors.hpp"

#include <array>
#include <string>

namespace mscc::ff {
namespace {

constexpr std::array<std::uint64_t, 33> kPolynomials = {
    0,           0x3,         0x7,         0xB,         0x13,        0x25,        0x43,
    0x83,        0x11D,       0x211,       0x409,       0x805,       0x1053,      0x201B,
    0x4443,      0x8003,      0x1100B,     0x20009,     0x40081,     0x80027,     0x100009,
    0x200005,    0x400003,    0x800021,    0x100001B,   0x2000009,   0x4000047,   0x8000027,
    0x10000009,  0x20000005,  0x40000053,  0x80000009,  0x1000000AF,
};

int degree(std::uint64_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = degree(f);
  for (int da = degree(a); da >= df; da = degree(a)) a ^= f << (da - df);
  return a;
}

// Operands are reduced modulo f (degree <= 32), so products fit in 64 bits.
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  std::uint64_t r = 0;
  const int df = degree(f);
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> df & 1) a ^= f;
  }
  return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod f
std::uint64_t frobenius_x(unsigned k, std::uint64_t f) {
  std::uint64_t x = poly_mod(2, f);
  for (unsigned i = 0; i < k; ++i) x = poly_mulmod(x, x, f);
  return x;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint64_t default_polynomial(unsigned m) {
  if (m < 1 || m > 32) throw Error(ErrorKind::DomainError, "field width must be in [1, 32], got " + std::to_string(m));
  return kPolynomials[m];
}

bool is_irreducible(std::uint64_t poly) {
  const int m = degree(poly);
  if (m < 1 || m > 32) return false;
  const auto x = poly_mod(2, poly);
  if (frobenius_x(static_cast<unsigned>(m), poly) != x) return false;
  for (auto p : prime_factors(static_cast<std::uint64_t>(m))) {
    const auto h = frobenius_x(static_cast<unsigned>(m / static_cast<int>(p)), poly) ^ x;
    if (poly_gcd(poly, h) != 1) return false;
  }
  return true;
}

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.m < 1 || spec_.m > 32)
    throw Error(ErrorKind::DomainError, "field width must be in [1, 32], got " + std::to_string(spec_.m));
  if (degree(spec_.reduction_polynomial) != static_cast<int>(spec_.m))
    throw Error(ErrorKind::DomainError, "reduction polynomial degree does not match m");
  if (!is_irreducible(spec_.reduction_polynomial))
    throw Error(ErrorKind::DomainError, "reduction polynomial is reducible");

  if (spec_.m > 16) return;

  // The table polynomial need not be primitive, so search for a generator.
  const std::uint64_t group = order() - 1;
  Element gen = 1;
  if (group > 1) {
    const auto factors = prime_factors(group);
    for (Element g = 2; g < order(); ++g) {
      bool generates = true;
      for (auto p : factors) {
        if (pow(g, group / p) == 1) {
          generates = false;
          break;
        }
      }
      if (generates) {
        gen = g;
        break;
      }
    }
  }

  log_.assign(order(), 0);
  exp_.assign(2 * group, 0);
  Element v = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = v;
    exp_[i + group] = v;
    log_[v] = static_cast<std::uint32_t>(i);
    v = mul_slow(v, gen);
  }
  tables_ = true;
}

Element Field::mul_slow(Element a, Element b) const noexcept {
  return static_cast<Element>(poly_mulmod(a, b, spec_.reduction_polynomial));
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1;
  Element base = a;
  while (e) {
    if (e & 1) result = tables_ ? mul(result, base) : mul_slow(result, base);
    base = tables_ ? mul(base, base) : mul_slow(base, base);
    e >>= 1;
  }
  return result;
}

Element Field::inverse(Element a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInverse, "zero has no multiplicative inverse");
  if (tables_) {
    const std::uint64_t group = order() - 1;
    return exp_[(group - log_[a]) % group];
  }
  return pow(a, order() - 2);
}

}  // namespace mscc::ff
