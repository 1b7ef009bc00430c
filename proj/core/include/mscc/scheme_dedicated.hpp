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

#include "mscc/model.hpp"
#include "mscc/network.hpp"
#include "mscc/scheme_single.hpp"

#include <span>
#include <vector>

namespace mscc {

/// L independent single-server problems over contiguous groups of K'/L
/// users, K' = L * ceil(K/L). Users K..K'-1 are virtual.
struct DedicatedPlan {
  int users = 0;         // K
  int padded_users = 0;  // K'
  int servers = 0;       // L
  DedicatedNetwork network;
  std::vector<SingleServerPlan> groups;

  int group_size() const noexcept { return padded_users / servers; }
  int group_of(int user) const noexcept { return user / group_size(); }
  int local_index(int user) const noexcept { return user % group_size(); }
};

DedicatedPlan make_dedicated_plan(const ScenarioConfig& config);

/// Demand vector over the padded users; virtual users request file 0.
DemandVector padded_demands(const DedicatedPlan& plan, const DemandVector& demands);

/// One cache per padded user (virtual users last, excluded from reports).
std::vector<CacheContents> ded_place(const ScenarioConfig& config, const FileCatalog& catalog);

/// Server l's row carries group l's packets back to back; shorter groups are
/// zero-padded. Every column is routed by the dedicated partition.
TransmitBlock ded_deliver(const ScenarioConfig& config, const FileCatalog& catalog, const DemandVector& demands);

/// `received` is what the user heard over the whole block.
std::vector<Element> ded_decode(const ScenarioConfig& config, int user, const CacheContents& cache,
                                std::span<const Element> received, const DemandVector& demands);

}  // namespace mscc
