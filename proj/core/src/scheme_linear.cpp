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

#include "mscc/scheme_linear.hpp"

#include "mscc/errors.hpp"

#include <algorithm>
#include <string>

namespace mscc {

using ff::Element;
using ff::FieldMatrix;
using ff::FieldVector;

LinearPlanParams lin_params(const ScenarioConfig& config) {
  const Rational t = config.t();
  if (!is_integer(t))
    throw Error(ErrorKind::NonIntegralT, "t = K*M/N = " + to_string(t) + " is not an integer");
  LinearPlanParams p;
  p.users = config.K;
  p.servers = config.L;
  p.t = numer(t).convert_to<int>();
  p.active_servers = std::min(config.L, config.K - p.t);
  p.file_symbols = config.file_symbols();
  if (p.active_servers == 0) {
    p.subset_size = config.K;
    p.mini_symbols = p.file_symbols;
    return p;
  }
  p.minis_per_subfile = binomial(p.users - p.t - 1, p.active_servers - 1);
  p.omega_max = binomial(p.t + p.active_servers - 1, p.t);
  p.subset_size = p.t + p.active_servers;
  p.subset_count = binomial(p.users, p.subset_size);
  p.mini_symbols = equal_share(p.file_symbols, binomial(p.users, p.t) * p.minis_per_subfile, "linear mini-files");
  return p;
}

SplitPlan linear_split(const LinearPlanParams& params) {
  SplitPlan split(SchemeTag::Linear, params.file_symbols);
  for (const auto& tau : k_subsets(params.users, params.t))
    for (std::int64_t j = 0; j < params.minis_per_subfile; ++j)
      split.append({tau, 0, static_cast<int>(j)}, params.mini_symbols);
  return split;
}

FieldMatrix sample_ntm(const ff::Field& field, int K, int L, ff::Rng& rng, int* resamples) {
  const auto full = static_cast<std::size_t>(std::min(K, L));
  for (;;) {
    auto H = ff::random_matrix(field, static_cast<std::size_t>(K), static_cast<std::size_t>(L), rng);
    if (ff::rank(field, H) == full) return H;
    if (resamples != nullptr) ++*resamples;
  }
}

PrecoderSet design_precoders(const ff::Field& field, const FieldMatrix& H, const LinearPlanParams& params,
                             ff::Rng& rng) {
  PrecoderSet set;
  const auto Lp = static_cast<std::size_t>(params.active_servers);
  if (Lp == 0) return set;
  auto truncated = [&](int j) {
    const auto row = H.row(static_cast<std::size_t>(j));
    return FieldVector(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(Lp));
  };
  for (const auto& S : k_subsets(params.users, params.subset_size)) {
    for (const auto& T : k_subsets_of(S, params.t + 1)) {
      std::vector<FieldVector> perp, nonperp;
      for (int j : S) (contains(T, j) ? nonperp : perp).push_back(truncated(j));
      FieldVector u = ff::constrained_precoder(field, perp, nonperp, Lp, rng);
      u.resize(H.cols(), 0);
      for (int j : S) {
        const bool zero = ff::dot(field, H.row(static_cast<std::size_t>(j)), u) == 0;
        if (zero == contains(T, j))
          throw Error(ErrorKind::PrecoderNotFound, "precoder for S={" + subset_label(S) + "}, T={" +
                                                       subset_label(T) + "} failed verification");
      }
      set.u.emplace(std::pair{S, T}, std::move(u));
    }
  }
  return set;
}

MiniFreshLedger::MiniFreshLedger(const LinearPlanParams& params) : limit_(params.minis_per_subfile) {
  if (params.active_servers == 0) return;
  for (const auto& tau : k_subsets(params.users, params.t))
    for (int r = 0; r < params.users; ++r)
      if (!contains(tau, r)) counters_.emplace(std::pair{r, tau}, 1);
}

int MiniFreshLedger::current(int user, const Subset& tau) const {
  const int n = counters_.at({user, tau});
  if (n > limit_)
    throw Error(ErrorKind::LedgerOverflow,
                "user " + std::to_string(user + 1) + " exhausted the minis of {" + subset_label(tau) + "}");
  return n;
}

void MiniFreshLedger::advance(int user, const Subset& tau) { ++counters_.at({user, tau}); }

namespace {

std::size_t position(const Subset& T, int user) {
  return static_cast<std::size_t>(std::find(T.begin(), T.end(), user) - T.begin());
}

// Coefficients multiplying user k's own minis, one row per omega.
FieldMatrix own_coefficients(const SubsetCoefficients& rec, int k) {
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < rec.combos.size(); ++c)
    if (contains(rec.combos[c], k)) cols.push_back(c);
  FieldMatrix A(rec.coeffs.size(), cols.size());
  for (std::size_t w = 0; w < rec.coeffs.size(); ++w)
    for (std::size_t c = 0; c < cols.size(); ++c) A(w, c) = rec.coeffs[w][cols[c]][position(rec.combos[cols[c]], k)];
  return A;
}

}  // namespace

FieldMatrix build_block(const ff::Field& field, const LinearPlanParams& params, const SplitPlan& split,
                        const Subset& S, const MiniFreshLedger& ledger, const FileCatalog& catalog,
                        const DemandVector& demands, const PrecoderSet& precoders, ff::Rng& rng, int attempts,
                        SubsetCoefficients& record, int& singular_retries) {
  const auto omega = static_cast<std::size_t>(params.omega_max);
  const auto len = static_cast<std::size_t>(params.mini_symbols);
  record.S = S;
  record.combos = k_subsets_of(S, params.t + 1);
  record.mini.clear();
  for (const auto& T : record.combos) {
    std::vector<int> idx;
    for (int r : T) idx.push_back(ledger.current(r, without(T, r)) - 1);
    record.mini.push_back(std::move(idx));
  }

  for (int attempt = 0; attempt < std::max(attempts, 1); ++attempt) {
    record.coeffs.assign(omega, {});
    for (auto& per_T : record.coeffs)
      for (const auto& T : record.combos) {
        std::vector<Element> c(T.size(), 1);
        if (omega > 1)
          for (auto& e : c) e = ff::random_element(field, rng);
        per_T.push_back(std::move(c));
      }
    const bool ok = std::all_of(S.begin(), S.end(), [&](int k) {
      return ff::rank(field, own_coefficients(record, k)) == omega;
    });
    if (ok || attempt + 1 >= attempts) break;
    ++singular_retries;
  }

  FieldMatrix X(static_cast<std::size_t>(params.servers), omega * len);
  std::vector<Element> G(len);
  for (std::size_t w = 0; w < omega; ++w) {
    for (std::size_t c = 0; c < record.combos.size(); ++c) {
      const Subset& T = record.combos[c];
      std::fill(G.begin(), G.end(), 0);
      for (std::size_t i = 0; i < T.size(); ++i) {
        const auto range = *split.find({without(T, T[i]), 0, record.mini[c][i]});
        const auto file = catalog.file(demands[static_cast<std::size_t>(T[i])]);
        ff::axpy(field, record.coeffs[w][c][i], file.subspan(static_cast<std::size_t>(range.offset), len), G);
      }
      const auto& u = precoders.at(S, T);
      for (std::size_t l = 0; l < u.size(); ++l)
        if (u[l] != 0) ff::axpy(field, u[l], G, X.row(l).subspan(w * len, len));
    }
  }
  return X;
}

std::vector<CacheContents> lin_place(const ScenarioConfig& config, const FileCatalog& catalog) {
  const auto params = lin_params(config);
  return place_by_rule(catalog, linear_split(params), config.K, config.m,
                       [](int k, const PieceLocator& where) { return contains(where.subset, k); });
}

LinearDelivery lin_deliver(const ScenarioConfig& config, const ff::Field& field, const FileCatalog& catalog,
                           const DemandVector& demands, const FieldMatrix& H, ff::Rng& rng, int attempts) {
  validate_demands(demands, config.K, config.N);
  const auto params = lin_params(config);
  if (H.rows() != static_cast<std::size_t>(config.K) || H.cols() != static_cast<std::size_t>(config.L))
    throw Error(ErrorKind::LengthMismatch, "NTM must be K x L");
  const SplitPlan split = linear_split(params);
  LinearDelivery out{{}, design_precoders(field, H, params, rng), {}, MiniFreshLedger(params), 0};
  out.block.X = FieldMatrix(static_cast<std::size_t>(config.L), 0);
  if (params.active_servers == 0) return out;
  for (const auto& S : k_subsets(params.users, params.subset_size)) {
    SubsetCoefficients rec;
    const auto X = build_block(field, params, split, S, out.ledger, catalog, demands, out.precoders, rng, attempts,
                               rec, out.singular_retries);
    out.block.append(X, nullptr);
    for (const auto& T : rec.combos)
      for (int r : T) out.ledger.advance(r, without(T, r));
    out.record.push_back(std::move(rec));
  }
  return out;
}

std::vector<Element> lin_receive(const ff::Field& field, const FieldMatrix& H, const TransmitBlock& block, int user) {
  return receive(field, LinearNetwork{H}, block, user);
}

std::vector<Element> lin_decode(const ScenarioConfig& config, const ff::Field& field, int user,
                                const CacheContents& cache, std::span<const Element> received,
                                const DemandVector& demands, const FieldMatrix& H, const PrecoderSet& precoders,
                                const CoefficientRecord& record) {
  const auto params = lin_params(config);
  const SplitPlan split = linear_split(params);
  const auto omega = static_cast<std::size_t>(params.omega_max);
  const auto len = static_cast<std::size_t>(params.mini_symbols);
  if (received.size() < record.size() * omega * len)
    throw Error(ErrorKind::DecodeFailure, "received stream is truncated");
  const auto h = H.row(static_cast<std::size_t>(user));

  std::map<PieceLocator, std::vector<Element>> recovered;
  std::size_t offset = 0;
  for (const auto& rec : record) {
    const std::size_t base = offset;
    offset += omega * len;
    if (!contains(rec.S, user)) continue;

    std::vector<std::size_t> own;
    std::vector<Element> gain(rec.combos.size(), 0);
    for (std::size_t c = 0; c < rec.combos.size(); ++c) {
      if (!contains(rec.combos[c], user)) continue;
      gain[c] = ff::dot(field, h, precoders.at(rec.S, rec.combos[c]));
      if (gain[c] == 0) throw Error(ErrorKind::DecodeFailure, "desired term is nulled at the receiver");
      own.push_back(c);
    }

    FieldMatrix Y(omega, len);
    FieldMatrix A(omega, own.size());
    for (std::size_t w = 0; w < omega; ++w) {
      auto y = Y.row(w);
      std::copy_n(received.begin() + static_cast<std::ptrdiff_t>(base + w * len), len, y.begin());
      for (std::size_t j = 0; j < own.size(); ++j) {
        const std::size_t c = own[j];
        const Subset& T = rec.combos[c];
        for (std::size_t i = 0; i < T.size(); ++i) {
          const Element scaled = field.mul(gain[c], rec.coeffs[w][c][i]);
          if (T[i] == user) {
            A(w, j) = scaled;
            continue;
          }
          const auto side = cache.lookup({demands[static_cast<std::size_t>(T[i])], {without(T, T[i]), 0, rec.mini[c][i]}});
          if (!side) throw Error(ErrorKind::DecodeFailure, "interference mini not cached");
          ff::axpy(field, scaled, *side, y);
        }
      }
    }

    FieldMatrix Z;
    try {
      Z = ff::solve_square(field, std::move(A), std::move(Y));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularMatrix) throw;
      throw Error(ErrorKind::SingularDecodeMatrix,
                  "user " + std::to_string(user + 1) + " cannot solve the block of S={" + subset_label(rec.S) + "}");
    }
    for (std::size_t j = 0; j < own.size(); ++j) {
      const std::size_t c = own[j];
      const Subset& T = rec.combos[c];
      const auto row = Z.row(j);
      recovered.emplace(PieceLocator{without(T, user), 0, rec.mini[c][position(T, user)]},
                        std::vector<Element>(row.begin(), row.end()));
    }
  }

  const int wanted = demands[static_cast<std::size_t>(user)];
  return assemble_file(split, [&](const PieceLocator& where) -> std::span<const Element> {
    if (auto hit = cache.lookup({wanted, where})) return *hit;
    auto it = recovered.find(where);
    if (it == recovered.end()) return {};
    return it->second;
  });
}

}  // namespace mscc
