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

#include "mscc/network.hpp"

#include "mscc/errors.hpp"

#include <string>

namespace mscc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// owner[k] = class index serving user k, or -1 for the idle class.
std::vector<int> owners(const OrderedPartition& p, int users, int servers) {
  std::vector<int> owner(static_cast<std::size_t>(users), -1);
  for (std::size_t c = 0; c < p.size(); ++c)
    for (int k : p[c])
      if (k < users && static_cast<int>(c) < servers) owner[static_cast<std::size_t>(k)] = static_cast<int>(c);
  return owner;
}

}  // namespace

int user_count(const NetworkModel& net) {
  return std::visit(overloaded{[](const DedicatedNetwork& d) { return d.users; },
                               [](const FlexibleNetwork& f) { return f.users; },
                               [](const LinearNetwork& l) { return static_cast<int>(l.H.rows()); }},
                    net);
}

int server_count(const NetworkModel& net) {
  return std::visit(overloaded{[](const DedicatedNetwork& d) { return static_cast<int>(d.partition.size()); },
                               [](const FlexibleNetwork& f) { return f.servers; },
                               [](const LinearNetwork& l) { return static_cast<int>(l.H.cols()); }},
                    net);
}

DedicatedNetwork make_dedicated(int K, int L) {
  const int group = (K + L - 1) / L;
  DedicatedNetwork net{K, {}};
  for (int l = 0; l < L; ++l) {
    Subset cls;
    for (int j = 0; j < group; ++j) cls.push_back(l * group + j);
    net.partition.push_back(std::move(cls));
  }
  return net;
}

bool is_partition(const OrderedPartition& p, int users) {
  std::vector<bool> seen(static_cast<std::size_t>(users), false);
  int count = 0;
  for (const auto& cls : p) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const int k = cls[i];
      if (k < 0 || k >= users || seen[static_cast<std::size_t>(k)]) return false;
      if (i > 0 && cls[i - 1] >= k) return false;
      seen[static_cast<std::size_t>(k)] = true;
      ++count;
    }
  }
  return count == users;
}

ff::FieldVector apply_network(const ff::Field& field, const NetworkModel& net, std::span<const ff::Element> s,
                              const OrderedPartition* routing) {
  if (static_cast<int>(s.size()) != server_count(net))
    throw Error(ErrorKind::LengthMismatch, "slot carries " + std::to_string(s.size()) + " server symbols, expected " +
                                               std::to_string(server_count(net)));
  return std::visit(
      overloaded{
          [&](const DedicatedNetwork& d) {
            const int padded = static_cast<int>(d.partition.size() * (d.partition.empty() ? 0 : d.partition[0].size()));
            if (!is_partition(d.partition, padded))
              throw Error(ErrorKind::InvalidPartition, "dedicated classes do not partition the padded users");
            for (const auto& cls : d.partition)
              if (cls.size() != d.partition[0].size())
                throw Error(ErrorKind::InvalidPartition, "dedicated classes must have equal size");
            const auto owner = owners(d.partition, d.users, static_cast<int>(d.partition.size()));
            ff::FieldVector r(static_cast<std::size_t>(d.users));
            for (int k = 0; k < d.users; ++k) r[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(owner[static_cast<std::size_t>(k)])];
            return r;
          },
          [&](const FlexibleNetwork& f) {
            if (routing == nullptr || !is_partition(*routing, f.users))
              throw Error(ErrorKind::InvalidPartition, "flexible slot needs a partition of the users");
            const auto owner = owners(*routing, f.users, f.servers);
            ff::FieldVector r(static_cast<std::size_t>(f.users), 0);
            for (int k = 0; k < f.users; ++k)
              if (const int o = owner[static_cast<std::size_t>(k)]; o >= 0)
                r[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(o)];
            return r;
          },
          [&](const LinearNetwork& l) { return ff::multiply(field, l.H, s); },
      },
      net);
}

void TransmitBlock::append(const ff::FieldMatrix& columns, const OrderedPartition* routing) {
  if (columns.cols() == 0) return;
  X.append_columns(columns);
  std::uint32_t id = UINT32_MAX;
  if (routing != nullptr) {
    if (routings.empty() || routings.back() != *routing) routings.push_back(*routing);
    id = static_cast<std::uint32_t>(routings.size() - 1);
  }
  column_routing.insert(column_routing.end(), columns.cols(), id);
}

std::vector<ff::Element> receive(const ff::Field& field, const NetworkModel& net, const TransmitBlock& block, int user) {
  const auto slots = static_cast<std::size_t>(block.slots());
  std::vector<ff::Element> y(slots, 0);
  if (const auto* lin = std::get_if<LinearNetwork>(&net)) {
    const auto h = lin->H.row(static_cast<std::size_t>(user));
    for (std::size_t l = 0; l < block.X.rows(); ++l)
      if (h[l] != 0) ff::axpy(field, h[l], block.X.row(l), y);
    return y;
  }
  // Routed networks: look up the serving class once per distinct routing.
  std::vector<int> server_of(block.routings.size() + 1, -2);
  ff::FieldVector column(block.X.rows());
  for (std::size_t c = 0; c < slots; ++c) {
    const std::uint32_t id = block.column_routing.empty() ? UINT32_MAX : block.column_routing[c];
    const OrderedPartition* routing = id == UINT32_MAX ? nullptr : &block.routings[id];
    for (std::size_t l = 0; l < column.size(); ++l) column[l] = block.X(l, c);
    const std::size_t slot = id == UINT32_MAX ? block.routings.size() : id;
    if (server_of[slot] == -2) {
      // Probe the routing with unit vectors to learn which server feeds `user`.
      server_of[slot] = -1;
      for (std::size_t l = 0; l < column.size(); ++l) {
        ff::FieldVector probe(column.size(), 0);
        probe[l] = 1;
        if (apply_network(field, net, probe, routing)[static_cast<std::size_t>(user)] == 1)
          server_of[slot] = static_cast<int>(l);
      }
    }
    if (server_of[slot] >= 0) y[c] = column[static_cast<std::size_t>(server_of[slot])];
  }
  return y;
}

}  // namespace mscc
