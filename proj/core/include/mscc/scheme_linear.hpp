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

#include "mscc/linalg.hpp"
#include "mscc/model.hpp"
#include "mscc/network.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace mscc {

/// Parameters of the linear-network scheme after the L' = min(L, K - t)
/// fallback. With t = K nothing is delivered and `active_servers` is 0.
struct LinearPlanParams {
  int users = 0;
  int servers = 0;         // L as configured
  int active_servers = 0;  // L'
  int t = 0;
  std::int64_t minis_per_subfile = 1;  // C(K - t - 1, L' - 1)
  std::int64_t omega_max = 1;          // C(t + L' - 1, t)
  int subset_size = 0;                 // t + L'
  std::int64_t subset_count = 0;       // C(K, t + L')
  std::int64_t file_symbols = 0;
  std::int64_t mini_symbols = 0;

  std::int64_t delivery_symbols() const { return subset_count * omega_max * mini_symbols; }
};

/// Throws Error(NonIntegralT) or Error(IndivisibleSplit).
LinearPlanParams lin_params(const ScenarioConfig& config);

/// Mini-file (tau, 0, j) for every t-subset tau and j < minis_per_subfile.
SplitPlan linear_split(const LinearPlanParams& params);

/// Uniform K x L matrix over the field, resampled while rank < min(K, L).
/// `resamples` (optional) counts the rejected draws.
ff::FieldMatrix sample_ntm(const ff::Field& field, int K, int L, ff::Rng& rng, int* resamples = nullptr);

/// u_S^T for every (t + L')-subset S and (t + 1)-subset T of S. Vectors have
/// L entries; those beyond the first L' are zero.
struct PrecoderSet {
  std::map<std::pair<Subset, Subset>, ff::FieldVector> u;

  const ff::FieldVector& at(const Subset& S, const Subset& T) const { return u.at({S, T}); }
};

/// Throws Error(PrecoderNotFound) when some constraint set admits no vector.
PrecoderSet design_precoders(const ff::Field& field, const ff::FieldMatrix& H, const LinearPlanParams& params,
                             ff::Rng& rng);

/// N(r, tau) per user r and t-subset tau with r not in tau, starting at 1.
class MiniFreshLedger {
 public:
  explicit MiniFreshLedger(const LinearPlanParams& params);

  /// Throws Error(LedgerOverflow) past minis_per_subfile.
  int current(int user, const Subset& tau) const;
  void advance(int user, const Subset& tau);
  const std::map<std::pair<int, Subset>, int>& counters() const noexcept { return counters_; }

 private:
  std::int64_t limit_ = 0;
  std::map<std::pair<int, Subset>, int> counters_;
};

/// Shared-randomness record for one subset S: the (t + 1)-subsets in order,
/// the zero-based mini index used for each member r of each T, and the
/// combination coefficients coeffs[omega][T][r].
struct SubsetCoefficients {
  Subset S;
  std::vector<Subset> combos;
  std::vector<std::vector<int>> mini;
  std::vector<std::vector<std::vector<ff::Element>>> coeffs;
};

using CoefficientRecord = std::vector<SubsetCoefficients>;

/// One L x (omega_max * mini_symbols) block for subset S. Coefficients are
/// redrawn (up to `attempts` draws in total) while some user's decode
/// matrix is singular; each redraw increments `singular_retries`.
ff::FieldMatrix build_block(const ff::Field& field, const LinearPlanParams& params, const SplitPlan& split,
                            const Subset& S, const MiniFreshLedger& ledger, const FileCatalog& catalog, const DemandVector& demands,
                            const PrecoderSet& precoders, ff::Rng& rng, int attempts, SubsetCoefficients& record,
                            int& singular_retries);

struct LinearDelivery {
  TransmitBlock block;
  PrecoderSet precoders;
  CoefficientRecord record;
  MiniFreshLedger ledger;
  int singular_retries = 0;
};

std::vector<CacheContents> lin_place(const ScenarioConfig& config, const FileCatalog& catalog);

/// Blocks for all subsets in lexicographic order.
LinearDelivery lin_deliver(const ScenarioConfig& config, const ff::Field& field, const FileCatalog& catalog,
                           const DemandVector& demands, const ff::FieldMatrix& H, ff::Rng& rng, int attempts = 8);

/// Row `user` of H X.
std::vector<ff::Element> lin_receive(const ff::Field& field, const ff::FieldMatrix& H, const TransmitBlock& block,
                                     int user);

/// Throws Error(SingularDecodeMatrix) or Error(DecodeFailure).
std::vector<ff::Element> lin_decode(const ScenarioConfig& config, const ff::Field& field, int user,
                                    const CacheContents& cache, std::span<const ff::Element> received,
                                    const DemandVector& demands, const ff::FieldMatrix& H,
                                    const PrecoderSet& precoders, const CoefficientRecord& record);

}  // namespace mscc
