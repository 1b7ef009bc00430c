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

#include "mscc/combinatorics.hpp"
#include "mscc/linalg.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace mscc {

/// Fixed partition of the K' (padded) users into L equal classes; users with
/// index >= K are virtual and their outputs are dropped.
struct DedicatedNetwork {
  int users = 0;
  OrderedPartition partition;
};

/// Any partition of the users may be routed, chosen per slot.
struct FlexibleNetwork {
  int users = 0;
  int servers = 0;
};

/// r = H s with a K x L network transfer matrix.
struct LinearNetwork {
  ff::FieldMatrix H;
};

using NetworkModel = std::variant<DedicatedNetwork, FlexibleNetwork, LinearNetwork>;

int user_count(const NetworkModel& net);
int server_count(const NetworkModel& net);

/// Balanced contiguous partition of [L * ceil(K / L)].
DedicatedNetwork make_dedicated(int K, int L);

/// Checks that classes are disjoint, sorted and cover [users]. The first
/// `servers` classes are served; trailing classes are idle.
bool is_partition(const OrderedPartition& p, int users);

/// Maps one slot of server symbols to the K user symbols. Dedicated networks
/// use their own partition; flexible networks need `routing`. Throws
/// Error(InvalidPartition) on malformed routing.
ff::FieldVector apply_network(const ff::Field& field, const NetworkModel& net, std::span<const ff::Element> s,
                              const OrderedPartition* routing = nullptr);

/// X with one column per slot, plus the routing used in each column
/// (dedicated and flexible networks only).
struct TransmitBlock {
  ff::FieldMatrix X;
  std::vector<OrderedPartition> routings;
  std::vector<std::uint32_t> column_routing;

  std::int64_t slots() const noexcept { return static_cast<std::int64_t>(X.cols()); }

  /// Appends `columns` (L rows) routed by `routing`, or unrouted when null.
  void append(const ff::FieldMatrix& columns, const OrderedPartition* routing);
};

/// Everything user k hears over the whole block.
std::vector<ff::Element> receive(const ff::Field& field, const NetworkModel& net, const TransmitBlock& block, int user);

}  // namespace mscc
