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

#include "mscc/rational.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mscc {

/// Sorted, zero-based set of user indices.
using Subset = std::vector<int>;

std::int64_t binomial(std::int64_t n, std::int64_t k);
BigInt binomial_big(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);
/// All k-subsets of `pool` (sorted) in lexicographic order.
std::vector<Subset> k_subsets_of(const Subset& pool, int k);

Subset set_minus(const Subset& a, const Subset& b);
Subset without(const Subset& a, int element);
Subset with(const Subset& a, int element);
bool contains(const Subset& a, int element);

/// Canonical one-based label: {0, 2} -> "1,3"; the empty set renders as "".
std::string subset_label(const Subset& s);

/// Ordered-class partition of users: class i (< L) is served by server i;
/// any trailing class is the idle (virtual) class.
using OrderedPartition = std::vector<Subset>;

/// Visits every ordered partition of {0..n-1} whose class sizes are `sizes`
/// (in order). Classes are drawn lexicographically, first class outermost.
/// Count: n! / prod(sizes[i]!).
void for_each_ordered_partition(int n, std::span<const int> sizes,
                                const std::function<void(const OrderedPartition&)>& visit);

std::int64_t lcm(std::int64_t a, std::int64_t b);

}  // namespace mscc
