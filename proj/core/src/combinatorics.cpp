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

#include "mscc/combinatorics.hpp"

#include "mscc/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mscc {

BigInt binomial_big(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  const BigInt b = binomial_big(n, k);
  if (b > std::numeric_limits<std::int64_t>::max())
    throw Error(ErrorKind::DomainError, "binomial coefficient overflows 64 bits");
  return b.convert_to<std::int64_t>();
}

BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<Subset> k_subsets_of(const Subset& pool, int k) {
  std::vector<Subset> out;
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    Subset s(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) s[i] = pool[static_cast<std::size_t>(idx[i])];
    out.push_back(std::move(s));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<Subset> k_subsets(int n, int k) {
  Subset pool(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(pool.begin(), pool.end(), 0);
  return k_subsets_of(pool, k);
}

Subset set_minus(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset without(const Subset& a, int element) {
  Subset out;
  out.reserve(a.size());
  for (int x : a)
    if (x != element) out.push_back(x);
  return out;
}

Subset with(const Subset& a, int element) {
  Subset out = a;
  out.insert(std::lower_bound(out.begin(), out.end(), element), element);
  return out;
}

bool contains(const Subset& a, int element) { return std::binary_search(a.begin(), a.end(), element); }

std::string subset_label(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out;
}

namespace {

void partition_rec(const Subset& remaining, std::span<const int> sizes, std::size_t level, OrderedPartition& current,
                   const std::function<void(const OrderedPartition&)>& visit) {
  if (level == sizes.size()) {
    if (remaining.empty()) visit(current);
    return;
  }
  if (level + 1 == sizes.size()) {
    if (static_cast<int>(remaining.size()) != sizes[level]) return;
    current.push_back(remaining);
    visit(current);
    current.pop_back();
    return;
  }
  for (auto& cls : k_subsets_of(remaining, sizes[level])) {
    const Subset rest = set_minus(remaining, cls);
    current.push_back(std::move(cls));
    partition_rec(rest, sizes, level + 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

void for_each_ordered_partition(int n, std::span<const int> sizes,
                                const std::function<void(const OrderedPartition&)>& visit) {
  if (std::accumulate(sizes.begin(), sizes.end(), 0) != n) return;
  Subset all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  OrderedPartition current;
  partition_rec(all, sizes, 0, current, visit);
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace mscc
