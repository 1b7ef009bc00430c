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

#include "mscc/errors.hpp"
#include "mscc/field.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using mscc::ff::Element;
using mscc::ff::Field;
using mscc::ff::FieldSpec;

// Schoolbook carryless product followed by long division, kept apart from
// the library on purpose.
Element oracle_mul(Element a, Element b, unsigned m, std::uint64_t poly) {
  std::uint64_t acc = 0;
  for (unsigned i = 0; i < 32; ++i)
    if ((b >> i) & 1u) acc ^= std::uint64_t{a} << i;
  for (int bit = 63; bit >= static_cast<int>(m); --bit)
    if ((acc >> bit) & 1u) acc ^= poly << (bit - static_cast<int>(m));
  return static_cast<Element>(acc);
}

// Trial division by every polynomial of degree 1..deg/2.
bool oracle_irreducible(std::uint64_t poly) {
  const int deg = 63 - __builtin_clzll(poly);
  auto mod = [](std::uint64_t a, std::uint64_t d) {
    const int dd = 63 - __builtin_clzll(d);
    for (int bit = 63; bit >= dd; --bit)
      if ((a >> bit) & 1u) a ^= d << (bit - dd);
    return a;
  };
  for (std::uint64_t d = 2; (63 - __builtin_clzll(d)) <= deg / 2; ++d)
    if (mod(poly, d) == 0) return false;
  return true;
}

TEST(Field, Gf16KnownProducts) {
  const Field f(FieldSpec{4, 0x13});
  EXPECT_EQ(f.mul(0x2, 0x8), 0x3u);
  EXPECT_EQ(f.inverse(0x2), 0x9u);
  EXPECT_EQ(f.mul(0x2, 0x9), 0x1u);
  EXPECT_EQ(Field::add(0x5, 0x3), 0x6u);
}

TEST(Field, AxiomsExhaustiveAtWidthFour) {
  const Field f(4);
  const Element q = 16;
  for (Element a = 0; a < q; ++a) {
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.mul(a, 0), 0u);
    EXPECT_EQ(Field::add(a, a), 0u);
    if (a != 0) EXPECT_EQ(f.mul(a, f.inverse(a)), 1u);
    for (Element b = 0; b < q; ++b) {
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.mul(a, b), oracle_mul(a, b, 4, f.polynomial()));
      for (Element c = 0; c < q; ++c) {
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.mul(a, Field::add(b, c)), Field::add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST(Field, ZeroHasNoInverse) {
  const Field f(8);
  try {
    f.inverse(0);
    FAIL() << "expected ZeroInverse";
  } catch (const mscc::Error& e) {
    EXPECT_EQ(e.kind(), mscc::ErrorKind::ZeroInverse);
  }
}

class FieldWidth : public ::testing::TestWithParam<unsigned> {};

TEST_P(FieldWidth, MatchesOracleOnSamples) {
  const unsigned m = GetParam();
  const Field f(m);
  std::mt19937_64 rng(m);
  for (int i = 0; i < 2000; ++i) {
    const Element a = static_cast<Element>(rng()) & f.mask();
    const Element b = static_cast<Element>(rng()) & f.mask();
    ASSERT_EQ(f.mul(a, b), oracle_mul(a, b, m, f.polynomial()));
    ASSERT_EQ(f.mul(a, b), f.mul_slow(a, b));
    if (a != 0) {
      ASSERT_EQ(f.mul(a, f.inverse(a)), 1u);
      ASSERT_EQ(f.div(f.mul(a, b), a), b);
    }
  }
  const Element g = 3 & f.mask();
  EXPECT_EQ(f.pow(g, 0), 1u);
  EXPECT_EQ(f.pow(g, 2), f.mul(g, g));
  EXPECT_EQ(f.pow(g, 5), f.mul(f.pow(g, 2), f.pow(g, 3)));
}

INSTANTIATE_TEST_SUITE_P(Widths, FieldWidth, ::testing::Values(1u, 2u, 4u, 8u, 12u, 16u, 17u, 24u, 31u, 32u));

TEST(Field, PolynomialTableIsIrreducible) {
  for (unsigned m = 1; m <= 32; ++m) {
    const auto poly = mscc::ff::default_polynomial(m);
    EXPECT_EQ(63 - __builtin_clzll(poly), static_cast<int>(m));
    EXPECT_TRUE(mscc::ff::is_irreducible(poly)) << "m=" << m;
    if (m <= 20) EXPECT_TRUE(oracle_irreducible(poly)) << "m=" << m;
  }
  EXPECT_FALSE(mscc::ff::is_irreducible(0x15));  // (x^2 + x + 1)^2
  EXPECT_TRUE(oracle_irreducible(0x13));
  EXPECT_FALSE(oracle_irreducible(0x15));
}

TEST(Field, RejectsReduciblePolynomial) {
  EXPECT_THROW(Field(FieldSpec{4, 0x15}), mscc::Error);
  EXPECT_THROW(Field(FieldSpec{4, 0x7}), mscc::Error);
  EXPECT_THROW(Field(33u), mscc::Error);
}

}  // namespace
