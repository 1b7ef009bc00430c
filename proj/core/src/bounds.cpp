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

#include "mscc/bounds.hpp"

#include "mscc/combinatorics.hpp"
#include "mscc/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace mscc {

namespace {

void check_memory(const Rational& M, int N) {
  if (M < 0 || M > N) throw Error(ErrorKind::DomainError, "M=" + to_string(M) + " outside [0, " + std::to_string(N) + "]");
}

// Memory sharing between the corners at M_j = j * N / granularity.
Rational interpolate(const Rational& M, int N, int granularity, const std::function<Rational(int)>& corner) {
  const Rational pos = M * granularity / N;
  const BigInt lo = floor(pos);
  const int j = lo.convert_to<int>();
  const Rational at_lo = corner(j);
  if (pos == Rational(lo)) return at_lo;
  const Rational frac = pos - Rational(lo);
  return at_lo + frac * (corner(j + 1) - at_lo);
}

}  // namespace

int PartitionProfile::users() const noexcept { return std::accumulate(p.begin(), p.end(), 0) + Q; }

std::vector<int> PartitionProfile::class_sizes() const {
  std::vector<int> sizes = p;
  sizes.push_back(Q);
  return sizes;
}

void validate_profile(const PartitionProfile& profile, int K, int L) {
  auto reject = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidProfile, to_string(profile) + ": " + why);
  };
  if (profile.servers() != L) reject("expected " + std::to_string(L) + " server strategies");
  for (int p : profile.p)
    if (p < 2) reject("every p_i must be at least 2");
  if (profile.Q < 0) reject("Q must be non-negative");
  if (profile.users() != K) reject("p_1 + ... + p_L + Q must equal K=" + std::to_string(K));
}

std::string to_string(const PartitionProfile& profile) {
  std::string out;
  for (std::size_t i = 0; i < profile.p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(profile.p[i]);
  }
  if (profile.Q > 0) out += "+Q" + std::to_string(profile.Q);
  return out;
}

PartitionProfile parse_profile(const std::string& text) {
  PartitionProfile out;
  std::string body = text;
  if (auto plus = text.find("+Q"); plus != std::string::npos) {
    body = text.substr(0, plus);
    try {
      out.Q = std::stoi(text.substr(plus + 2));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParameterRejected, "bad profile '" + text + "'");
    }
  }
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.p.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParameterRejected, "bad profile '" + text + "'");
    }
  }
  if (out.p.empty()) throw Error(ErrorKind::ParameterRejected, "empty profile");
  return out;
}

FlexiblePlanParams flex_params(int K, int L, const PartitionProfile& profile) {
  validate_profile(profile, K, L);
  BigInt denom_fact = factorial(profile.Q);
  for (int p : profile.p) denom_fact *= factorial(p);
  FlexiblePlanParams out;
  BigInt total = 0;
  for (int p : profile.p) {
    const BigInt numer_fact = factorial(K - p) * factorial(p);
    if (numer_fact % denom_fact != 0) throw Error(ErrorKind::InvalidProfile, "non-integral gamma");
    out.alpha.push_back(binomial_big(K, p - 1));
    out.gamma.push_back(numer_fact / denom_fact);
    total += out.alpha.back() * out.gamma.back();
  }
  out.x = Rational(BigInt(1), total);
  for (const auto& g : out.gamma) out.x_i.push_back(Rational(g) * out.x);
  return out;
}

Rational single_server_delay(int K, const Rational& M, int N) {
  check_memory(M, N);
  return interpolate(M, N, K, [&](int t) { return Rational(K - t, 1 + t); });
}

Rational dedicated_delay(int K, int L, const Rational& M, int N) {
  check_memory(M, N);
  const int padded = L * ((K + L - 1) / L);
  const int group = padded / L;
  // Corners where K' M / (L N) = j is integral, i.e. M = j N / group.
  return interpolate(M, N, group, [&](int j) {
    const Rational mem = Rational(j) * N / group;
    const Rational num = padded * (1 - mem / N);
    const Rational den = std::min(Rational(padded), Rational(L + padded * mem / N));
    return num / den;
  });
}

Rational linear_delay(int K, int L, const Rational& M, int N) {
  check_memory(M, N);
  return interpolate(M, N, K, [&](int t) { return Rational(K - t, std::min(K, L + t)); });
}

MemoryDelayPair flexible_pair(int K, int L, int N, const PartitionProfile& profile) {
  validate_profile(profile, K, L);
  Rational weighted = 0;
  Rational plain = 0;
  for (int p : profile.p) {
    weighted += Rational(p * (p - 1), K - p + 1);
    plain += Rational(p, K - p + 1);
  }
  return {Rational(N, K) * weighted / plain, 1 / plain};
}

std::vector<FlexibleCorner> flexible_corner_set(int K, int L, int N) {
  std::vector<FlexibleCorner> corners;
  if (K < 2 * L) return corners;
  // Non-decreasing p vectors with p_i >= 2 and sum <= K.
  std::vector<int> p(static_cast<std::size_t>(L), 2);
  std::function<void(int, int, int)> rec = [&](int level, int min_part, int budget) {
    if (level == L) {
      PartitionProfile prof{p, budget};
      const auto pt = flexible_pair(K, L, N, prof);
      const bool seen = std::any_of(corners.begin(), corners.end(), [&](const auto& c) { return c.point == pt; });
      if (!seen) corners.push_back({std::move(prof), pt, false});
      return;
    }
    const int remaining_levels = L - level - 1;
    for (int v = min_part; v + 2 * remaining_levels <= budget; ++v) {
      p[static_cast<std::size_t>(level)] = v;
      rec(level + 1, v, budget - v);
    }
  };
  rec(0, 2, K);
  std::stable_sort(corners.begin(), corners.end(), [](const auto& a, const auto& b) {
    return a.point.M < b.point.M || (a.point.M == b.point.M && a.point.T < b.point.T);
  });

  // Lower convex hull (monotone chain) over points sorted by M.
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    if (!hull.empty() && corners[hull.back()].point.M == corners[i].point.M) continue;
    while (hull.size() >= 2) {
      const auto& a = corners[hull[hull.size() - 2]].point;
      const auto& b = corners[hull.back()].point;
      const auto& c = corners[i].point;
      const Rational cross = (b.M - a.M) * (c.T - a.T) - (b.T - a.T) * (c.M - a.M);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(i);
  }
  for (auto i : hull) corners[i].on_envelope = true;
  return corners;
}

Rational flexible_Mstar(int K, int L, int N) {
  std::optional<Rational> best;
  for (const auto& c : flexible_corner_set(K, L, N))
    if (c.profile.Q == 0 && (!best || c.point.M < *best)) best = c.point.M;
  if (!best) throw Error(ErrorKind::InvalidProfile, "no Q=0 profile exists for K < 2L");
  return *best;
}

Rational cutset_bound(int K, int L, const Rational& M, int N) {
  check_memory(M, N);
  Rational best = 0;
  for (int s = 1; s <= K; ++s) {
    const int blocks = N / s;
    if (blocks == 0) continue;
    const Rational value = (s - Rational(s, blocks) * M) / std::min(s, L);
    best = std::max(best, value);
  }
  return best;
}

Rational gap_ratio(const Rational& achievable, const Rational& bound) {
  if (bound == 0) throw Error(ErrorKind::InfiniteGap, "lower bound is zero");
  return achievable / bound;
}

DelayReport make_report(SchemeTag scheme, const Rational& formula, const Rational& bound,
                        std::optional<std::int64_t> measured) {
  DelayReport r{scheme, formula, measured, bound, std::nullopt};
  if (bound > 0) r.gap = gap_ratio(formula, bound);
  return r;
}

}  // namespace mscc
