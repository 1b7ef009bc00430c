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

#include "mscc/scheme_dedicated.hpp"

#include "mscc/errors.hpp"

#include <algorithm>

namespace mscc {

DedicatedPlan make_dedicated_plan(const ScenarioConfig& config) {
  DedicatedPlan plan;
  plan.users = config.K;
  plan.servers = config.L;
  plan.padded_users = config.L * ((config.K + config.L - 1) / config.L);
  plan.network = make_dedicated(config.K, config.L);
  for (int l = 0; l < config.L; ++l)
    plan.groups.push_back(make_single_plan(plan.group_size(), config.M, config.N, config.file_symbols(), l));
  return plan;
}

DemandVector padded_demands(const DedicatedPlan& plan, const DemandVector& demands) {
  DemandVector out = demands;
  out.resize(static_cast<std::size_t>(plan.padded_users), 0);
  return out;
}

std::vector<CacheContents> ded_place(const ScenarioConfig& config, const FileCatalog& catalog) {
  const auto plan = make_dedicated_plan(config);
  std::vector<CacheContents> caches;
  for (const auto& group : plan.groups) {
    auto local = single_place(group, catalog, config.m);
    for (int i = 0; i < group.users; ++i) {
      CacheContents global(group.group * plan.group_size() + i, config.m);
      for (auto& [key, symbols] : local[static_cast<std::size_t>(i)].pieces()) global.store(key, symbols);
      caches.push_back(std::move(global));
    }
  }
  return caches;
}

TransmitBlock ded_deliver(const ScenarioConfig& config, const FileCatalog& catalog, const DemandVector& demands) {
  validate_demands(demands, config.K, config.N);
  const auto plan = make_dedicated_plan(config);
  const auto all = padded_demands(plan, demands);

  std::vector<std::vector<Element>> streams;
  std::size_t slots = 0;
  for (const auto& group : plan.groups) {
    const DemandVector local(all.begin() + group.group * plan.group_size(),
                             all.begin() + (group.group + 1) * plan.group_size());
    std::vector<Element> stream;
    for (const auto& p : single_deliver(group, catalog, local))
      stream.insert(stream.end(), p.payload.begin(), p.payload.end());
    slots = std::max(slots, stream.size());
    streams.push_back(std::move(stream));
  }

  ff::FieldMatrix X(static_cast<std::size_t>(config.L), slots);
  for (std::size_t l = 0; l < streams.size(); ++l) std::copy(streams[l].begin(), streams[l].end(), X.row(l).begin());
  TransmitBlock block;
  block.append(X, &plan.network.partition);
  return block;
}

std::vector<Element> ded_decode(const ScenarioConfig& config, int user, const CacheContents& cache,
                                std::span<const Element> received, const DemandVector& demands) {
  const auto plan = make_dedicated_plan(config);
  if (user < 0 || user >= plan.users) throw Error(ErrorKind::DecodeFailure, "not a real user");
  const auto all = padded_demands(plan, demands);
  const auto& group = plan.groups[static_cast<std::size_t>(plan.group_of(user))];
  DemandVector local(all.begin() + group.group * plan.group_size(),
                     all.begin() + (group.group + 1) * plan.group_size());
  const auto packets = packets_from_stream(group, received.first(std::min<std::size_t>(
                                                      received.size(), static_cast<std::size_t>(group.delivery_symbols()))));
  return single_decode(group, plan.local_index(user), cache, packets, local);
}

}  // namespace mscc
