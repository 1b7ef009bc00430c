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

#include "mscc/combinatorics.hpp"
#include "mscc/errors.hpp"

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace mscc;

TEST(Combinatorics, BinomialPascal) {
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(binomial(n, 0), 1);
    EXPECT_EQ(binomial(n, n), 1);
    for (int k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
  EXPECT_EQ(binomial(4, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial_big(60, 30), BigInt("118264581564861424"));
  EXPECT_EQ(factorial(10), BigInt(3628800));
}

TEST(Combinatorics, SubsetsAreLexicographicAndComplete) {
  const auto s = k_subsets(5, 2);
  ASSERT_EQ(s.size(), 10u);
  EXPECT_EQ(s.front(), (Subset{0, 1}));
  EXPECT_EQ(s.back(), (Subset{3, 4}));
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(k_subsets(4, 0), std::vector<Subset>{Subset{}});
  EXPECT_TRUE(k_subsets(3, 4).empty());
  const auto of = k_subsets_of({1, 4, 6}, 2);
  EXPECT_EQ(of, (std::vector<Subset>{{1, 4}, {1, 6}, {4, 6}}));
}

TEST(Combinatorics, SetHelpers) {
  EXPECT_EQ(set_minus({0, 1, 2, 3}, {1, 3}), (Subset{0, 2}));
  EXPECT_EQ(without({0, 2, 5}, 2), (Subset{0, 5}));
  EXPECT_EQ(with({0, 5}, 2), (Subset{0, 2, 5}));
  EXPECT_TRUE(contains({0, 5}, 5));
  EXPECT_FALSE(contains({0, 5}, 4));
  EXPECT_EQ(subset_label({0, 2}), "1,3");
  EXPECT_EQ(subset_label({}), "");
  EXPECT_EQ(lcm(4, 6), 12);
}

TEST(Combinatorics, OrderedPartitionsCountAndShape) {
  const std::vector<int> sizes{2, 2, 1};
  std::set<OrderedPartition> seen;
  for_each_ordered_partition(5, sizes, [&](const OrderedPartition& p) {
    ASSERT_EQ(p.size(), 3u);
    Subset all;
    for (std::size_t i = 0; i < p.size(); ++i) {
      ASSERT_EQ(static_cast<int>(p[i].size()), sizes[i]);
      all.insert(all.end(), p[i].begin(), p[i].end());
    }
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all, (Subset{0, 1, 2, 3, 4}));
    seen.insert(p);
  });
  EXPECT_EQ(seen.size(), 30u);  // 5! / (2! 2! 1!)
}

TEST(Combinatorics, PartitionOrderIsFirstClassOutermost) {
  const std::vector<int> sizes{2, 2};
  std::vector<OrderedPartition> order;
  for_each_ordered_partition(4, sizes, [&](const OrderedPartition& p) { order.push_back(p); });
  ASSERT_EQ(order.size(), 6u);
  EXPECT_EQ(order[0], (OrderedPartition{{0, 1}, {2, 3}}));
  EXPECT_EQ(order[5], (OrderedPartition{{2, 3}, {0, 1}}));
}

}  // namespace
