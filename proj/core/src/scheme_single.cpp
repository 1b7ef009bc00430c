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

#include "mscc/scheme_single.hpp"

#include "mscc/errors.hpp"

#include <string>

namespace mscc {

SingleServerPlan make_single_plan(int users, const Rational& M, int N, std::int64_t file_symbols, int group) {
  const Rational t = M * users / N;
  if (!is_integer(t))
    throw Error(ErrorKind::NonIntegralT, "t = " + std::to_string(users) + "*M/N = " + to_string(t) + " is not an integer");
  SingleServerPlan plan;
  plan.users = users;
  plan.t = numer(t).convert_to<int>();
  plan.group = group;
  plan.file_symbols = file_symbols;
  plan.subfile_symbols = equal_share(file_symbols, binomial(users, plan.t), "single-server sub-files");
  return plan;
}

SplitPlan single_split(const SingleServerPlan& plan) {
  SplitPlan split(SchemeTag::Single, plan.file_symbols);
  for (auto& tau : k_subsets(plan.users, plan.t)) split.append({std::move(tau), plan.group, 0}, plan.subfile_symbols);
  return split;
}

std::vector<CacheContents> single_place(const SingleServerPlan& plan, const FileCatalog& catalog, unsigned symbol_bits) {
  return place_by_rule(catalog, single_split(plan), plan.users, symbol_bits,
                       [](int k, const PieceLocator& where) { return contains(where.subset, k); });
}

std::vector<XorPacket> single_deliver(const SingleServerPlan& plan, const FileCatalog& catalog,
                                      const DemandVector& demands) {
  if (plan.t >= plan.users) return {};
  const SplitPlan split = single_split(plan);
  std::vector<XorPacket> packets;
  packets.reserve(static_cast<std::size_t>(plan.packet_count()));
  for (auto& T : k_subsets(plan.users, plan.t + 1)) {
    XorPacket pkt{T, std::vector<Element>(static_cast<std::size_t>(plan.subfile_symbols), 0)};
    for (int r : T) {
      const auto range = *split.find({without(T, r), plan.group, 0});
      const auto file = catalog.file(demands[static_cast<std::size_t>(r)]);
      for (std::int64_t i = 0; i < range.length; ++i) pkt.payload[static_cast<std::size_t>(i)] ^= file[static_cast<std::size_t>(range.offset + i)];
    }
    packets.push_back(std::move(pkt));
  }
  return packets;
}

std::vector<XorPacket> packets_from_stream(const SingleServerPlan& plan, std::span<const Element> stream) {
  std::vector<XorPacket> packets;
  if (plan.t >= plan.users) return packets;
  const auto len = static_cast<std::size_t>(plan.subfile_symbols);
  std::size_t offset = 0;
  for (auto& T : k_subsets(plan.users, plan.t + 1)) {
    if (offset + len > stream.size()) throw Error(ErrorKind::DecodeFailure, "received stream is truncated");
    packets.push_back({std::move(T), std::vector<Element>(stream.begin() + static_cast<std::ptrdiff_t>(offset),
                                                          stream.begin() + static_cast<std::ptrdiff_t>(offset + len))});
    offset += len;
  }
  return packets;
}

std::vector<Element> single_decode(const SingleServerPlan& plan, int user, const CacheContents& cache,
                                   std::span<const XorPacket> packets, const DemandVector& demands) {
  const int wanted = demands[static_cast<std::size_t>(user)];
  const SplitPlan split = single_split(plan);
  std::map<Subset, const XorPacket*> by_subset;
  for (const auto& p : packets) by_subset.emplace(p.users, &p);

  std::map<Subset, std::vector<Element>> recovered;
  for (const auto& [where, range] : split.pieces()) {
    if (contains(where.subset, user)) continue;
    const Subset T = with(where.subset, user);
    auto it = by_subset.find(T);
    if (it == by_subset.end())
      throw Error(ErrorKind::DecodeFailure, "no packet for users {" + subset_label(T) + "}");
    std::vector<Element> piece = it->second->payload;
    if (static_cast<std::int64_t>(piece.size()) != range.length)
      throw Error(ErrorKind::DecodeFailure, "packet length mismatch");
    for (int r : T) {
      if (r == user) continue;
      const auto side = cache.lookup({demands[static_cast<std::size_t>(r)], {without(T, r), plan.group, 0}});
      if (!side) throw Error(ErrorKind::DecodeFailure, "interference term not cached");
      for (std::size_t i = 0; i < piece.size(); ++i) piece[i] ^= (*side)[i];
    }
    recovered.emplace(where.subset, std::move(piece));
  }

  return assemble_file(split, [&](const PieceLocator& where) -> std::span<const Element> {
    if (auto hit = cache.lookup({wanted, where})) return *hit;
    auto it = recovered.find(where.subset);
    if (it == recovered.end()) return {};
    return it->second;
  });
}

std::vector<CacheContents> ss_place(const ScenarioConfig& config, const FileCatalog& catalog) {
  const auto plan = make_single_plan(config.K, config.M, config.N, config.file_symbols());
  return single_place(plan, catalog, config.m);
}

std::vector<XorPacket> ss_deliver(const ScenarioConfig& config, const FileCatalog& catalog,
                                  const DemandVector& demands) {
  validate_demands(demands, config.K, config.N);
  const auto plan = make_single_plan(config.K, config.M, config.N, config.file_symbols());
  return single_deliver(plan, catalog, demands);
}

std::vector<Element> ss_decode(const ScenarioConfig& config, int user, const CacheContents& cache,
                               std::span<const XorPacket> packets, const DemandVector& demands) {
  const auto plan = make_single_plan(config.K, config.M, config.N, config.file_symbols());
  return single_decode(plan, user, cache, packets, demands);
}

TransmitBlock ss_transmit(std::span<const XorPacket> packets) {
  std::vector<Element> row;
  for (const auto& p : packets) row.insert(row.end(), p.payload.begin(), p.payload.end());
  TransmitBlock block;
  const auto cols = row.size();
  block.X = ff::FieldMatrix(1, cols, std::move(row));
  block.column_routing.assign(cols, UINT32_MAX);
  return block;
}

NetworkModel broadcast_network(int K) { return make_dedicated(K, 1); }

}  // namespace mscc
