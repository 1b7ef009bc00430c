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
#include "mscc/rational.hpp"

#include <optional>
#include <vector>

namespace mscc {

/// Server strategies p_1..p_L (each >= 2) plus the idle-class size Q, with
/// p_1 + ... + p_L + Q = K.
struct PartitionProfile {
  std::vector<int> p;
  int Q = 0;

  int servers() const noexcept { return static_cast<int>(p.size()); }
  int users() const noexcept;
  /// Class sizes p_1..p_L, Q, the layout used by the delivery enumeration.
  std::vector<int> class_sizes() const;

  bool operator==(const PartitionProfile&) const = default;
};

/// Throws Error(InvalidProfile) unless the profile fits K users on L servers.
void validate_profile(const PartitionProfile& profile, int K, int L);

/// "2,2" or "2,2+Q1".
std::string to_string(const PartitionProfile& profile);
/// Parses "2,3" (Q inferred by the caller) or "2,3+Q1".
PartitionProfile parse_profile(const std::string& text);

struct FlexiblePlanParams {
  std::vector<BigInt> alpha;  // C(K, p_i - 1)
  std::vector<BigInt> gamma;  // (K - p_i)! p_i! / (p_1! ... p_L! Q!)
  Rational x;                 // 1 / sum alpha_i gamma_i
  std::vector<Rational> x_i;  // gamma_i x
};

FlexiblePlanParams flex_params(int K, int L, const PartitionProfile& profile);

struct MemoryDelayPair {
  Rational M;
  Rational T;

  bool operator==(const MemoryDelayPair&) const = default;
};

struct FlexibleCorner {
  PartitionProfile profile;
  MemoryDelayPair point;
  /// On the lower convex envelope of the corner set.
  bool on_envelope = false;
};

/// Delays are in units of F/m slots. Formulas taking a memory M accept any
/// M in [0, N] and interpolate linearly between adjacent integral corners.
Rational single_server_delay(int K, const Rational& M, int N);
Rational dedicated_delay(int K, int L, const Rational& M, int N);
Rational linear_delay(int K, int L, const Rational& M, int N);

MemoryDelayPair flexible_pair(int K, int L, int N, const PartitionProfile& profile);
/// Every (M, T) over profiles with p_i >= 2 (as multisets), de-duplicated by
/// pair and ordered by increasing M.
std::vector<FlexibleCorner> flexible_corner_set(int K, int L, int N);
/// Smallest memory among Q = 0 profiles.
Rational flexible_Mstar(int K, int L, int N);

/// max over s of (s - s M / floor(N/s)) / min(s, L), floored at zero.
Rational cutset_bound(int K, int L, const Rational& M, int N);

/// achievable / bound; throws Error(InfiniteGap) when bound is zero.
Rational gap_ratio(const Rational& achievable, const Rational& bound);

struct DelayReport {
  SchemeTag scheme = SchemeTag::Single;
  Rational formula_delay;
  std::optional<std::int64_t> measured_slots;
  Rational lower_bound;
  std::optional<Rational> gap;
};

/// Fills formula, bound and gap (absent when the bound is zero).
DelayReport make_report(SchemeTag scheme, const Rational& formula, const Rational& bound,
                        std::optional<std::int64_t> measured = std::nullopt);

}  // namespace mscc
