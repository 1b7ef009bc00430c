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

#include "mscc/field.hpp"
#include "mscc/harness.hpp"
#include "mscc/linalg.hpp"
#include "mscc/scheme_flexible.hpp"
#include "mscc/scheme_linear.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace mscc;

void BM_FieldMul(benchmark::State& state) {
  const ff::Field f(static_cast<unsigned>(state.range(0)));
  ff::Rng rng(1);
  std::vector<ff::Element> a(4096), b(4096);
  for (auto& x : a) x = ff::random_element(f, rng);
  for (auto& x : b) x = ff::random_element(f, rng);
  for (auto _ : state) {
    ff::Element acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= f.mul(a[i], b[i]);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(24)->Arg(32);

void BM_Rank(benchmark::State& state) {
  const ff::Field f(16);
  ff::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = ff::random_matrix(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ff::rank(f, m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(4, 64);

void BM_LinearDelivery(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const int L = static_cast<int>(state.range(1));
  const int M = static_cast<int>(state.range(2));
  ScenarioSpec s;
  s.scheme = SchemeTag::Linear;
  s.K = K;
  s.L = L;
  s.N = K;
  s.M = Rational(M);
  const ScenarioConfig cfg{K, L, K, Rational(M), minimal_file_bits(s), 16, 1};
  const ff::Field f(16);
  ff::Rng rng(3);
  const auto catalog = FileCatalog::random(f, K, cfg.file_symbols(), 1);
  const auto H = sample_ntm(f, K, L, rng);
  DemandVector d(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) d[static_cast<std::size_t>(k)] = k;
  for (auto _ : state) benchmark::DoNotOptimize(lin_deliver(cfg, f, catalog, d, H, rng).block.slots());
}
BENCHMARK(BM_LinearDelivery)->Args({4, 2, 1})->Args({6, 3, 2})->Args({8, 3, 2})->Unit(benchmark::kMillisecond);

void BM_FlexibleDelivery(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const PartitionProfile prof{{2, K - 2}, 0};
  const auto picos = denom(flex_params(K, 2, prof).x).convert_to<std::int64_t>();
  const ScenarioConfig cfg{K, 2, K, flexible_pair(K, 2, K, prof).M, 16 * picos, 16, 1};
  const ff::Field f(16);
  const auto catalog = FileCatalog::random(f, K, cfg.file_symbols(), 1);
  DemandVector d(static_cast<std::size_t>(K));
  for (int k = 0; k < K; ++k) d[static_cast<std::size_t>(k)] = k;
  for (auto _ : state) benchmark::DoNotOptimize(flex_deliver(cfg, catalog, d, prof).slots());
}
BENCHMARK(BM_FlexibleDelivery)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
