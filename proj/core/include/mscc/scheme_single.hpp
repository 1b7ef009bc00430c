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

#include <span>
#include <vector>

namespace mscc {

/// Placement into C(K, t) sub-files keyed by t-subsets; delivery sends one
/// XOR packet per (t+1)-subset. `group` tags piece keys so several instances
/// can share one catalog (the dedicated scheme runs one per server).
struct SingleServerPlan {
  int users = 0;
  int t = 0;
  int group = 0;
  std::int64_t file_symbols = 0;
  std::int64_t subfile_symbols = 0;

  std::int64_t packet_count() const { return binomial(users, t + 1); }
  std::int64_t delivery_symbols() const { return packet_count() * subfile_symbols; }
};

/// Throws Error(NonIntegralT) when users*M/N is fractional and
/// Error(IndivisibleSplit) when the file does not cut into C(users, t) pieces.
SingleServerPlan make_single_plan(int users, const Rational& M, int N, std::int64_t file_symbols, int group = 0);

SplitPlan single_split(const SingleServerPlan& plan);

struct XorPacket {
  Subset users;  // the (t+1)-subset served
  std::vector<Element> payload;
};

/// Caches of plan.users users (user k keeps W_{n,tau} iff k in tau).
std::vector<CacheContents> single_place(const SingleServerPlan& plan, const FileCatalog& catalog, unsigned symbol_bits);

/// Packets in lexicographic order of their (t+1)-subsets.
std::vector<XorPacket> single_deliver(const SingleServerPlan& plan, const FileCatalog& catalog,
                                      const DemandVector& demands);

/// Cuts a received symbol stream back into the scheduled packets.
std::vector<XorPacket> packets_from_stream(const SingleServerPlan& plan, std::span<const Element> stream);

/// Recovers W_{d_user}; throws Error(DecodeFailure) when a needed piece is
/// neither cached nor deliverable.
std::vector<Element> single_decode(const SingleServerPlan& plan, int user, const CacheContents& cache,
                                   std::span<const XorPacket> packets, const DemandVector& demands);

// Scenario-level entry points (L is ignored: one broadcasting server).

std::vector<CacheContents> ss_place(const ScenarioConfig& config, const FileCatalog& catalog);
std::vector<XorPacket> ss_deliver(const ScenarioConfig& config, const FileCatalog& catalog,
                                  const DemandVector& demands);
std::vector<Element> ss_decode(const ScenarioConfig& config, int user, const CacheContents& cache,
                               std::span<const XorPacket> packets, const DemandVector& demands);

/// 1 x T block carrying the packets back to back, and the broadcast network
/// it travels over.
TransmitBlock ss_transmit(std::span<const XorPacket> packets);
NetworkModel broadcast_network(int K);

}  // namespace mscc
