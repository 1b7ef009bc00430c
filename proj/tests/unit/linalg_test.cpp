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
#include "mscc/linalg.hpp"

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace mscc::ff;

// Size of the row span by brute enumeration of all coefficient vectors.
std::size_t oracle_rank(const Field& f, const FieldMatrix& a) {
  const std::uint64_t q = f.order();
  std::set<FieldVector> span;
  std::vector<Element> coeff(a.rows(), 0);
  for (;;) {
    FieldVector v(a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) v[c] ^= f.mul(coeff[r], a(r, c));
    span.insert(v);
    std::size_t r = 0;
    while (r < coeff.size() && ++coeff[r] == q) coeff[r++] = 0;
    if (r == coeff.size()) break;
  }
  std::size_t rank = 0;
  for (std::uint64_t size = 1; size < span.size(); size *= q) ++rank;
  return rank;
}

TEST(Linalg, RankMatchesSpanEnumeration) {
  const Field f(2);
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 4;
    auto a = random_matrix(f, rows, cols, rng);
    if (trial % 5 == 0 && rows > 1) {
      // force a dependent row
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = f.mul(3, a(0, c));
    }
    ASSERT_EQ(rank(f, a), oracle_rank(f, a)) << "trial " << trial;
  }
}

TEST(Linalg, RankAtWidthFourAgainstOracle) {
  const Field f(4);
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_matrix(f, 3, 3, rng);
    if (trial % 3 == 0)
      for (std::size_t c = 0; c < 3; ++c) a(2, c) = f.mul(5, a(0, c)) ^ a(1, c);
    ASSERT_EQ(rank(f, a), oracle_rank(f, a));
  }
}

TEST(Linalg, SolveRoundTrips) {
  const Field f(16);
  Rng rng(3);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      FieldMatrix a;
      do a = random_matrix(f, n, n, rng);
      while (rank(f, a) < n);
      const auto x = random_vector(f, n, rng);
      const auto y = multiply(f, a, x);
      ASSERT_EQ(solve_square(f, a, y), x);
    }
  }
}

TEST(Linalg, SolveMatrixRightHandSide) {
  const Field f(8);
  Rng rng(5);
  FieldMatrix a;
  do a = random_matrix(f, 4, 4, rng);
  while (rank(f, a) < 4);
  const auto x = random_matrix(f, 4, 6, rng);
  EXPECT_EQ(solve_square(f, a, multiply(f, a, x)), x);
}

TEST(Linalg, SingularSystemThrows) {
  const Field f(8);
  const std::vector<FieldVector> rows{{1, 2, 3}, {f.mul(7, 1), f.mul(7, 2), f.mul(7, 3)}, {0, 0, 1}};
  const auto a = FieldMatrix::from_rows(rows);
  try {
    solve_square(f, a, FieldVector{1, 1, 1});
    FAIL() << "expected SingularMatrix";
  } catch (const mscc::Error& e) {
    EXPECT_EQ(e.kind(), mscc::ErrorKind::SingularMatrix);
  }
}

TEST(Linalg, DotLengthMismatch) {
  const Field f(4);
  const FieldVector a{1, 2}, b{1};
  EXPECT_THROW(dot(f, a, b), mscc::Error);
}

TEST(Linalg, NullspaceExhaustiveInTwoDimensions) {
  const Field f(4);
  const Element q = 16;
  for (Element h0 = 0; h0 < q; ++h0)
    for (Element h1 = 0; h1 < q; ++h1) {
      const std::vector<FieldVector> rows{{h0, h1}};
      const auto basis = nullspace_basis(f, rows, 2);
      const std::size_t expect_dim = (h0 == 0 && h1 == 0) ? 2 : 1;
      ASSERT_EQ(basis.size(), expect_dim);
      for (const auto& u : basis) ASSERT_EQ(dot(f, rows[0], u), 0u);
      std::size_t orthogonal = 0;
      for (Element a = 0; a < q; ++a)
        for (Element b = 0; b < q; ++b) orthogonal += dot(f, rows[0], FieldVector{a, b}) == 0;
      ASSERT_EQ(orthogonal, expect_dim == 2 ? 256u : 16u);
    }
}

TEST(Linalg, NullspaceOfEmptySetIsWholeSpace) {
  const Field f(4);
  const auto basis = nullspace_basis(f, {}, 3);
  ASSERT_EQ(basis.size(), 3u);
  EXPECT_EQ(rank(f, FieldMatrix::from_rows(basis)), 3u);
}

TEST(Linalg, ConstrainedPrecoderSatisfiesConstraints) {
  const Field f(16);
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    std::vector<FieldVector> perp, nonperp;
    for (std::size_t i = 0; i + 1 < dim; ++i) perp.push_back(random_vector(f, dim, rng));
    for (int i = 0; i < 3; ++i) nonperp.push_back(random_vector(f, dim, rng));
    const auto u = constrained_precoder(f, perp, nonperp, dim, rng);
    ASSERT_NE(std::count(u.begin(), u.end(), 0u), static_cast<long>(dim));
    for (const auto& h : perp) ASSERT_EQ(dot(f, h, u), 0u);
    for (const auto& h : nonperp) ASSERT_NE(dot(f, h, u), 0u);
  }
}

TEST(Linalg, ConstrainedPrecoderImpossible) {
  const Field f(8);
  Rng rng(1);
  const std::vector<FieldVector> h{{1, 7}};
  try {
    constrained_precoder(f, h, h, 2, rng, 16);
    FAIL() << "expected PrecoderNotFound";
  } catch (const mscc::Error& e) {
    EXPECT_EQ(e.kind(), mscc::ErrorKind::PrecoderNotFound);
  }
}

TEST(Linalg, MultiplyAgreesWithColumnwiseProducts) {
  const Field f(8);
  Rng rng(2);
  const auto a = random_matrix(f, 3, 4, rng);
  const auto b = random_matrix(f, 4, 5, rng);
  const auto c = multiply(f, a, b);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(c.column(j), multiply(f, a, b.column(j)));
  EXPECT_EQ(multiply(f, FieldMatrix::identity(3), a), a);
}

}  // namespace
