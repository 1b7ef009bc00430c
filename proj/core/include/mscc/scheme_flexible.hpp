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

#include "mscc/bounds.hpp"
#include "mscc/model.hpp"
#include "mscc/network.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace mscc {

/// File layout for flexible networks: server i owns a sub-file cut into
/// alpha_i mini-files (one per (p_i - 1)-subset), each cut into gamma_i
/// pico-files of x * F bits. Pico (tau, server i, copy j) is keyed
/// PieceLocator{tau, i, j}.
struct FlexiblePlan {
  int users = 0;
  int servers = 0;
  PartitionProfile profile;
  FlexiblePlanParams params;
  std::int64_t file_symbols = 0;
  std::int64_t pico_symbols = 0;
  std::int64_t partition_count = 0;

  std::int64_t delivery_symbols() const { return partition_count * pico_symbols; }
};

/// Throws Error(InvalidProfile) or Error(IndivisibleSplit).
FlexiblePlan make_flexible_plan(const ScenarioConfig& config, const PartitionProfile& profile);

SplitPlan flexible_split(const FlexiblePlan& plan);

/// All ordered (p_1, ..., p_L, Q)-partitions of the users, lexicographic.
std::vector<OrderedPartition> enumerate_partitions(int K, const PartitionProfile& profile);

/// N(i, P): next fresh pico index (one-based) for server i and p_i-subset P.
class FreshIndexLedger {
 public:
  explicit FreshIndexLedger(const FlexiblePlan& plan);

  /// Current index; throws Error(LedgerOverflow) once it exceeds gamma_i.
  int current(int server, const Subset& users) const;
  void advance(int server, const Subset& users);
  const std::map<std::pair<int, Subset>, int>& counters() const noexcept { return counters_; }

 private:
  std::vector<int> gamma_;
  std::map<std::pair<int, Subset>, int> counters_;
};

std::vector<CacheContents> flex_place(const ScenarioConfig& config, const FileCatalog& catalog,
                                      const PartitionProfile& profile);

/// One slot group of pico_symbols columns per partition. When `ledger_out`
/// is given it receives the final ledger state.
TransmitBlock flex_deliver(const ScenarioConfig& config, const FileCatalog& catalog, const DemandVector& demands,
                           const PartitionProfile& profile, FreshIndexLedger* ledger_out = nullptr);

/// Replays the public schedule against what `user` heard.
std::vector<Element> flex_decode(const ScenarioConfig& config, int user, const CacheContents& cache,
                                 std::span<const Element> received, const DemandVector& demands,
                                 const PartitionProfile& profile);

/// Per-user memory (in files) that the placement for this profile uses.
Rational flex_memory(const ScenarioConfig& config, const PartitionProfile& profile);

}  // namespace mscc
