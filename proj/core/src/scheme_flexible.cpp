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

#include "mscc/scheme_flexible.hpp"

#include "mscc/errors.hpp"

#include <string>

namespace mscc {

FlexiblePlan make_flexible_plan(const ScenarioConfig& config, const PartitionProfile& profile) {
  FlexiblePlan plan;
  plan.users = config.K;
  plan.servers = config.L;
  plan.profile = profile;
  plan.params = flex_params(config.K, config.L, profile);
  plan.file_symbols = config.file_symbols();
  const BigInt picos = denom(plan.params.x);  // x = 1 / sum alpha_i gamma_i
  plan.pico_symbols = equal_share(plan.file_symbols, picos.convert_to<std::int64_t>(), "flexible pico-files");
  BigInt count = factorial(config.K) / factorial(profile.Q);
  for (int p : profile.p) count /= factorial(p);
  plan.partition_count = count.convert_to<std::int64_t>();
  return plan;
}

SplitPlan flexible_split(const FlexiblePlan& plan) {
  SplitPlan split(SchemeTag::Flexible, plan.file_symbols);
  for (int i = 0; i < plan.servers; ++i) {
    const int copies = plan.params.gamma[static_cast<std::size_t>(i)].convert_to<int>();
    for (const auto& tau : k_subsets(plan.users, plan.profile.p[static_cast<std::size_t>(i)] - 1))
      for (int j = 0; j < copies; ++j) split.append({tau, i, j}, plan.pico_symbols);
  }
  return split;
}

std::vector<OrderedPartition> enumerate_partitions(int K, const PartitionProfile& profile) {
  std::vector<OrderedPartition> out;
  const auto sizes = profile.class_sizes();
  for_each_ordered_partition(K, sizes, [&](const OrderedPartition& p) { out.push_back(p); });
  return out;
}

FreshIndexLedger::FreshIndexLedger(const FlexiblePlan& plan) {
  for (int i = 0; i < plan.servers; ++i) {
    gamma_.push_back(plan.params.gamma[static_cast<std::size_t>(i)].convert_to<int>());
    for (auto& P : k_subsets(plan.users, plan.profile.p[static_cast<std::size_t>(i)])) counters_.emplace(std::pair{i, P}, 1);
  }
}

int FreshIndexLedger::current(int server, const Subset& users) const {
  const int n = counters_.at({server, users});
  if (n > gamma_[static_cast<std::size_t>(server)])
    throw Error(ErrorKind::LedgerOverflow, "server " + std::to_string(server + 1) + " exhausted the picos of {" +
                                               subset_label(users) + "}");
  return n;
}

void FreshIndexLedger::advance(int server, const Subset& users) { ++counters_.at({server, users}); }

std::vector<CacheContents> flex_place(const ScenarioConfig& config, const FileCatalog& catalog,
                                      const PartitionProfile& profile) {
  const auto plan = make_flexible_plan(config, profile);
  return place_by_rule(catalog, flexible_split(plan), config.K, config.m,
                       [](int k, const PieceLocator& where) { return contains(where.subset, k); });
}

TransmitBlock flex_deliver(const ScenarioConfig& config, const FileCatalog& catalog, const DemandVector& demands,
                           const PartitionProfile& profile, FreshIndexLedger* ledger_out) {
  validate_demands(demands, config.K, config.N);
  const auto plan = make_flexible_plan(config, profile);
  const SplitPlan split = flexible_split(plan);
  FreshIndexLedger ledger(plan);
  const auto len = static_cast<std::size_t>(plan.pico_symbols);

  TransmitBlock block;
  std::vector<Element> rows(static_cast<std::size_t>(config.L) * static_cast<std::size_t>(plan.delivery_symbols()), 0);
  const auto total_cols = static_cast<std::size_t>(plan.delivery_symbols());
  std::size_t col = 0;
  for (const auto& partition : enumerate_partitions(config.K, profile)) {
    for (int i = 0; i < config.L; ++i) {
      const Subset& P = partition[static_cast<std::size_t>(i)];
      const int j = ledger.current(i, P);
      Element* out = rows.data() + static_cast<std::size_t>(i) * total_cols + col;
      for (int r : P) {
        const auto range = *split.find({without(P, r), i, j - 1});
        const auto file = catalog.file(demands[static_cast<std::size_t>(r)]);
        for (std::size_t s = 0; s < len; ++s) out[s] ^= file[static_cast<std::size_t>(range.offset) + s];
      }
    }
    for (int i = 0; i < config.L; ++i) ledger.advance(i, partition[static_cast<std::size_t>(i)]);
    block.routings.push_back(partition);
    block.column_routing.insert(block.column_routing.end(), len, static_cast<std::uint32_t>(block.routings.size() - 1));
    col += len;
  }
  block.X = ff::FieldMatrix(static_cast<std::size_t>(config.L), total_cols, std::move(rows));
  if (ledger_out != nullptr) *ledger_out = std::move(ledger);
  return block;
}

std::vector<Element> flex_decode(const ScenarioConfig& config, int user, const CacheContents& cache,
                                 std::span<const Element> received, const DemandVector& demands,
                                 const PartitionProfile& profile) {
  const auto plan = make_flexible_plan(config, profile);
  const SplitPlan split = flexible_split(plan);
  FreshIndexLedger ledger(plan);
  const auto len = static_cast<std::size_t>(plan.pico_symbols);
  if (received.size() < static_cast<std::size_t>(plan.delivery_symbols()))
    throw Error(ErrorKind::DecodeFailure, "received stream is truncated");

  std::map<PieceLocator, std::vector<Element>> recovered;
  std::size_t col = 0;
  for (const auto& partition : enumerate_partitions(config.K, profile)) {
    for (int i = 0; i < config.L; ++i) {
      const Subset& P = partition[static_cast<std::size_t>(i)];
      if (contains(P, user)) {
        const int j = ledger.current(i, P);
        std::vector<Element> pico(received.begin() + static_cast<std::ptrdiff_t>(col),
                                  received.begin() + static_cast<std::ptrdiff_t>(col + len));
        for (int r : P) {
          if (r == user) continue;
          const auto side = cache.lookup({demands[static_cast<std::size_t>(r)], {without(P, r), i, j - 1}});
          if (!side) throw Error(ErrorKind::DecodeFailure, "interference pico not cached");
          for (std::size_t s = 0; s < len; ++s) pico[s] ^= (*side)[s];
        }
        recovered.emplace(PieceLocator{without(P, user), i, j - 1}, std::move(pico));
      }
    }
    for (int i = 0; i < config.L; ++i) ledger.advance(i, partition[static_cast<std::size_t>(i)]);
    col += len;
  }

  const int wanted = demands[static_cast<std::size_t>(user)];
  return assemble_file(split, [&](const PieceLocator& where) -> std::span<const Element> {
    if (auto hit = cache.lookup({wanted, where})) return *hit;
    auto it = recovered.find(where);
    if (it == recovered.end()) return {};
    return it->second;
  });
}

Rational flex_memory(const ScenarioConfig& config, const PartitionProfile& profile) {
  const auto params = flex_params(config.K, config.L, profile);
  Rational per_file = 0;
  for (std::size_t i = 0; i < profile.p.size(); ++i)
    per_file += Rational(binomial_big(config.K - 1, profile.p[i] - 2) * params.gamma[i]) * params.x;
  return per_file * config.N;
}

}  // namespace mscc
