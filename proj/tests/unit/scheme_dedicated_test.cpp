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
#include "mscc/harness.hpp"
#include "mscc/scheme_dedicated.hpp"

#include <gtest/gtest.h>

namespace {

using namespace mscc;

void round_trip(int K, int L, int N, const Rational& M, std::int64_t F, const std::string& demands) {
  const ScenarioConfig cfg{K, L, N, M, F, 16, 9};
  const ff::Field f(16);
  const auto catalog = FileCatalog::random(f, N, cfg.file_symbols(), cfg.seed);
  const auto caches = ded_place(cfg, catalog);
  const NetworkModel net = make_dedicated_plan(cfg).network;
  for (const auto& d : expand_demands(parse_demands(demands), K, N, 3)) {
    const auto block = ded_deliver(cfg, catalog, d);
    EXPECT_EQ(Rational(block.slots(), cfg.file_symbols()), dedicated_delay(K, L, M, N));
    for (int k = 0; k < K; ++k) {
      const auto out = ded_decode(cfg, k, caches[static_cast<std::size_t>(k)], receive(f, net, block, k), d);
      ASSERT_TRUE(std::equal(out.begin(), out.end(), catalog.file(d[static_cast<std::size_t>(k)]).begin()))
          << "K=" << K << " user " << k;
    }
  }
}

TEST(SchemeDedicated, TwoServersHalfFileAtMemoryTwo) {
  const ScenarioConfig cfg{4, 2, 4, 2, 32, 16, 1};
  const ff::Field f(16);
  const auto catalog = FileCatalog::random(f, 4, 2, 1);
  const auto block = ded_deliver(cfg, catalog, {0, 1, 2, 3});
  EXPECT_EQ(block.slots(), 1);  // F/m = 2 symbols, so half a file
  ASSERT_EQ(block.routings.size(), 1u);
  EXPECT_EQ(block.routings[0], (OrderedPartition{{0, 1}, {2, 3}}));
}

TEST(SchemeDedicated, ExhaustiveSweepFourUsers) { round_trip(4, 2, 4, 2, 16 * 2, "sweep"); }
TEST(SchemeDedicated, VirtualUsersArePadded) { round_trip(5, 2, 5, Rational(5, 3), 16 * 3, "random:20"); }
TEST(SchemeDedicated, ThreeServersNoCache) { round_trip(6, 3, 6, 0, 16, "random:10"); }

TEST(SchemeDedicated, VirtualUserCannotDecode) {
  const ScenarioConfig cfg{5, 2, 5, 0, 16, 16, 1};
  const ff::Field f(16);
  const auto catalog = FileCatalog::random(f, 5, 1, 1);
  const auto caches = ded_place(cfg, catalog);
  ASSERT_EQ(caches.size(), 6u);
  EXPECT_THROW(ded_decode(cfg, 5, caches[5], {}, {0, 1, 2, 3, 4}), Error);
}

}  // namespace
