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
#include "mscc/scheme_flexible.hpp"

#include <gtest/gtest.h>

namespace {

using namespace mscc;

ScenarioConfig make_config(int K, int L, int N, const PartitionProfile& prof, std::int64_t multiple = 1) {
  const auto pair = flexible_pair(K, L, N, prof);
  const auto picos = denom(flex_params(K, L, prof).x).convert_to<std::int64_t>();
  return ScenarioConfig{K, L, N, pair.M, 16 * picos * multiple, 16, 11};
}

void round_trip(int K, int L, int N, const PartitionProfile& prof, const std::string& demands) {
  const auto cfg = make_config(K, L, N, prof);
  const ff::Field f(16);
  const auto catalog = FileCatalog::random(f, N, cfg.file_symbols(), cfg.seed);
  const auto caches = flex_place(cfg, catalog, prof);
  const NetworkModel net = FlexibleNetwork{K, L};
  for (const auto& d : expand_demands(parse_demands(demands), K, N, 5)) {
    const auto block = flex_deliver(cfg, catalog, d, prof);
    EXPECT_EQ(Rational(block.slots(), cfg.file_symbols()), flexible_pair(K, L, N, prof).T);
    for (int k = 0; k < K; ++k) {
      const auto out = flex_decode(cfg, k, caches[static_cast<std::size_t>(k)], receive(f, net, block, k), d, prof);
      ASSERT_TRUE(std::equal(out.begin(), out.end(), catalog.file(d[static_cast<std::size_t>(k)]).begin()))
          << to_string(prof) << " user " << k;
    }
  }
}

TEST(SchemeFlexible, PartitionEnumerationCount) {
  EXPECT_EQ(enumerate_partitions(4, {{2, 2}, 0}).size(), 6u);
  EXPECT_EQ(enumerate_partitions(6, {{2, 3}, 1}).size(), 60u);  // 6! / (2! 3! 1!)
  for (const auto& p : enumerate_partitions(5, {{2, 2}, 1})) {
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[2].size(), 1u);
  }
}

TEST(SchemeFlexible, LedgerEndsOnePastGamma) {
  const std::vector<std::pair<int, PartitionProfile>> cases{{4, {{2, 2}, 0}}, {6, {{2, 3}, 1}}, {6, {{2, 2}, 2}}};
  for (const auto& [K, prof] : cases) {
    const auto cfg = make_config(K, 2, 6, prof);
    const ff::Field f(16);
    const auto catalog = FileCatalog::random(f, cfg.N, cfg.file_symbols(), 1);
    const auto plan = make_flexible_plan(cfg, prof);
    FreshIndexLedger ledger(plan);
    DemandVector d(static_cast<std::size_t>(cfg.K));
    for (int k = 0; k < cfg.K; ++k) d[static_cast<std::size_t>(k)] = k;
    flex_deliver(cfg, catalog, d, prof, &ledger);
    for (const auto& [key, value] : ledger.counters())
      EXPECT_EQ(value, plan.params.gamma[static_cast<std::size_t>(key.first)] + 1) << to_string(prof);
  }
}

TEST(SchemeFlexible, LedgerOverflowIsDetected) {
  const PartitionProfile prof{{2, 2}, 0};
  const auto plan = make_flexible_plan(make_config(4, 2, 4, prof), prof);
  FreshIndexLedger ledger(plan);
  EXPECT_EQ(ledger.current(0, {0, 1}), 1);
  ledger.advance(0, {0, 1});
  try {
    ledger.current(0, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LedgerOverflow);
  }
}

TEST(SchemeFlexible, EveryColumnCarriesAPartition) {
  const PartitionProfile prof{{2, 3}, 1};
  const auto cfg = make_config(6, 2, 6, prof);
  const ff::Field f(16);
  const auto catalog = FileCatalog::random(f, 6, cfg.file_symbols(), 1);
  const auto block = flex_deliver(cfg, catalog, {0, 1, 2, 3, 4, 5}, prof);
  ASSERT_EQ(block.column_routing.size(), static_cast<std::size_t>(block.slots()));
  for (auto idx : block.column_routing) EXPECT_TRUE(is_partition(block.routings.at(idx), 6));
}

TEST(SchemeFlexible, ExhaustiveSweepTwoByTwo) { round_trip(4, 2, 4, {{2, 2}, 0}, "sweep"); }
TEST(SchemeFlexible, SixUsersWithIdleClass) { round_trip(6, 2, 6, {{2, 3}, 1}, "random:15"); }
TEST(SchemeFlexible, SixUsersThreeServers) { round_trip(6, 3, 6, {{2, 2, 2}, 0}, "random:10"); }
TEST(SchemeFlexible, EightUsersSampled) { round_trip(8, 2, 8, {{3, 5}, 0}, "random:5"); }
TEST(SchemeFlexible, RepeatedDemands) { round_trip(5, 2, 6, {{2, 2}, 1}, "1,1,1,2,2"); }

}  // namespace
