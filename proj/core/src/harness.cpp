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

#include "mscc/harness.hpp"

#include "mscc/scheme_dedicated.hpp"
#include "mscc/scheme_flexible.hpp"
#include "mscc/scheme_linear.hpp"
#include "mscc/scheme_single.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <future>
#include <sstream>
#include <thread>

namespace mscc {

namespace {

[[noreturn]] void reject(const std::string& why) { throw Error(ErrorKind::ParameterRejected, why); }

int integral_t(int users, const Rational& M, int N) {
  const Rational t = M * users / N;
  if (!is_integer(t))
    throw Error(ErrorKind::NonIntegralT,
                std::to_string(users) + "*M/N = " + to_string(t) + " must be an integer for this scheme");
  return numer(t).convert_to<int>();
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) reject(std::string("bad ") + what + ": '" + std::string(text) + "'");
  return value;
}

constexpr std::uint64_t kDemandStream = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kNetworkStream = 0xc2b2ae3d27d4eb4fULL;

}  // namespace

DemandSpec parse_demands(const std::string& text) {
  DemandSpec spec;
  if (text == "all-distinct") return spec;
  if (text == "sweep") {
    spec.mode = DemandMode::Sweep;
    return spec;
  }
  if (text.rfind("random:", 0) == 0) {
    spec.mode = DemandMode::Random;
    spec.count = parse_int(std::string_view(text).substr(7), "random demand count");
    if (spec.count < 1) reject("random demand count must be positive");
    return spec;
  }
  spec.mode = DemandMode::Explicit;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) spec.explicit_demands.push_back(parse_int(item, "demand") - 1);
  if (spec.explicit_demands.empty()) reject("empty demand list");
  return spec;
}

std::string to_string(const DemandSpec& spec) {
  switch (spec.mode) {
    case DemandMode::AllDistinct: return "all-distinct";
    case DemandMode::Sweep: return "sweep";
    case DemandMode::Random: return "random:" + std::to_string(spec.count);
    case DemandMode::Explicit: break;
  }
  std::string out;
  for (int d : spec.explicit_demands) out += (out.empty() ? "" : ",") + std::to_string(d + 1);
  return out;
}

std::vector<DemandVector> expand_demands(const DemandSpec& spec, int K, int N, std::uint64_t seed) {
  std::vector<DemandVector> out;
  switch (spec.mode) {
    case DemandMode::Explicit:
      validate_demands(spec.explicit_demands, K, N);
      out.push_back(spec.explicit_demands);
      break;
    case DemandMode::AllDistinct: {
      DemandVector d(static_cast<std::size_t>(K));
      for (int k = 0; k < K; ++k) d[static_cast<std::size_t>(k)] = k % N;
      out.push_back(std::move(d));
      break;
    }
    case DemandMode::Sweep: {
      double total = 1;
      for (int k = 0; k < K; ++k) total *= N;
      if (total > double(1 << 20)) reject("demand sweep over N^K = " + std::to_string(total) + " vectors is too large");
      DemandVector d(static_cast<std::size_t>(K), 0);
      for (;;) {
        out.push_back(d);
        int k = K - 1;
        while (k >= 0 && ++d[static_cast<std::size_t>(k)] == N) d[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
      }
      break;
    }
    case DemandMode::Random: {
      ff::Rng rng(seed ^ kDemandStream);
      std::uniform_int_distribution<int> pick(0, N - 1);
      for (int i = 0; i < spec.count; ++i) {
        DemandVector d(static_cast<std::size_t>(K));
        for (auto& x : d) x = pick(rng);
        out.push_back(std::move(d));
      }
      break;
    }
  }
  return out;
}

Rational scenario_memory(const ScenarioSpec& spec) {
  if (spec.scheme != SchemeTag::Flexible) {
    if (!spec.M) reject("memory M is required for the " + std::string(to_string(spec.scheme)) + " scheme");
    return *spec.M;
  }
  if (!spec.profile) reject("flexible runs need a partition profile (--profile)");
  validate_profile(*spec.profile, spec.K, spec.L);
  const Rational M = flexible_pair(spec.K, spec.L, spec.N, *spec.profile).M;
  if (spec.M && *spec.M != M)
    reject("profile " + to_string(*spec.profile) + " places M = " + to_string(M) + ", not " + to_string(*spec.M));
  return M;
}

std::int64_t minimal_file_bits(const ScenarioSpec& spec) {
  const Rational M = scenario_memory(spec);
  std::int64_t unit = 1;
  switch (spec.scheme) {
    case SchemeTag::Single:
      unit = binomial(spec.K, integral_t(spec.K, M, spec.N));
      break;
    case SchemeTag::Dedicated: {
      const int group = (spec.K + spec.L - 1) / spec.L;
      unit = binomial(group, integral_t(group, M, spec.N));
      break;
    }
    case SchemeTag::Flexible:
      unit = denom(flex_params(spec.K, spec.L, *spec.profile).x).convert_to<std::int64_t>();
      break;
    case SchemeTag::Linear: {
      const int t = integral_t(spec.K, M, spec.N);
      const int active = std::min(spec.L, spec.K - t);
      unit = active == 0 ? 1 : binomial(spec.K, t) * binomial(spec.K - t - 1, active - 1);
      break;
    }
  }
  return unit * static_cast<std::int64_t>(spec.m);
}

namespace {

struct Outcome {
  std::int64_t slots = 0;
  int failures = 0;
  std::string first_failure;
};

void check(Outcome& out, const FileCatalog& catalog, int file, const std::vector<Element>& decoded) {
  const auto want = catalog.file(file);
  if (decoded.size() != want.size() || !std::equal(decoded.begin(), decoded.end(), want.begin())) {
    ++out.failures;
    if (out.first_failure.empty()) out.first_failure = "decoded file differs from W" + std::to_string(file + 1);
  }
}

template <typename Decode>
void decode_user(Outcome& out, const FileCatalog& catalog, int file, Decode&& decode) {
  try {
    check(out, catalog, file, decode());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DecodeFailure && e.kind() != ErrorKind::SingularDecodeMatrix) throw;
    ++out.failures;
    if (out.first_failure.empty()) out.first_failure = e.what();
  }
}

}  // namespace

RunRecord run_scenario(const ScenarioSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.spec = spec;
  rec.M = scenario_memory(spec);
  if (spec.K > 12 && !spec.force) reject("K = " + std::to_string(spec.K) + " exceeds the desk-scale limit 12 (use --force)");
  if (spec.m < 1 || spec.m > 32) reject("symbol width m must lie in [1, 32]");

  const std::int64_t unit = minimal_file_bits(spec);
  rec.F_bits = spec.F_bits == 0 ? unit : spec.F_bits;
  if (rec.F_bits % unit != 0)
    throw Error(ErrorKind::IndivisibleSplit,
                "F = " + std::to_string(rec.F_bits) + " is not a multiple of the minimal size " + std::to_string(unit));
  if (rec.F_bits > (std::int64_t{1} << 24) && !spec.force)
    reject("F = " + std::to_string(rec.F_bits) + " bits exceeds 2^24 (use --force)");

  const ScenarioConfig config{spec.K, spec.L, spec.N, rec.M, rec.F_bits, spec.m, spec.seed};
  config.validate();
  const ff::Field field(spec.m);
  const auto catalog = FileCatalog::random(field, spec.N, config.file_symbols(), spec.seed);
  const auto demand_list = expand_demands(spec.demands, spec.K, spec.N, spec.seed);
  rec.demand_vectors = static_cast<int>(demand_list.size());

  Outcome out;
  Rational formula;
  int bound_servers = spec.L;
  switch (spec.scheme) {
    case SchemeTag::Single: {
      bound_servers = 1;
      formula = single_server_delay(spec.K, rec.M, spec.N);
      const auto caches = ss_place(config, catalog);
      const auto plan = make_single_plan(spec.K, rec.M, spec.N, config.file_symbols());
      const auto net = broadcast_network(spec.K);
      for (const auto& d : demand_list) {
        const auto packets = ss_deliver(config, catalog, d);
        const auto block = ss_transmit(packets);
        out.slots = std::max(out.slots, block.slots());
        for (int k = 0; k < spec.K; ++k)
          decode_user(out, catalog, d[static_cast<std::size_t>(k)], [&] {
            const auto heard = packets_from_stream(plan, receive(field, net, block, k));
            return ss_decode(config, k, caches[static_cast<std::size_t>(k)], heard, d);
          });
      }
      break;
    }
    case SchemeTag::Dedicated: {
      formula = dedicated_delay(spec.K, spec.L, rec.M, spec.N);
      const auto caches = ded_place(config, catalog);
      const NetworkModel net = make_dedicated_plan(config).network;
      for (const auto& d : demand_list) {
        const auto block = ded_deliver(config, catalog, d);
        out.slots = std::max(out.slots, block.slots());
        for (int k = 0; k < spec.K; ++k)
          decode_user(out, catalog, d[static_cast<std::size_t>(k)], [&] {
            return ded_decode(config, k, caches[static_cast<std::size_t>(k)], receive(field, net, block, k), d);
          });
      }
      break;
    }
    case SchemeTag::Flexible: {
      formula = flexible_pair(spec.K, spec.L, spec.N, *spec.profile).T;
      const auto caches = flex_place(config, catalog, *spec.profile);
      const NetworkModel net = FlexibleNetwork{spec.K, spec.L};
      for (const auto& d : demand_list) {
        const auto block = flex_deliver(config, catalog, d, *spec.profile);
        out.slots = std::max(out.slots, block.slots());
        for (int k = 0; k < spec.K; ++k)
          decode_user(out, catalog, d[static_cast<std::size_t>(k)], [&] {
            return flex_decode(config, k, caches[static_cast<std::size_t>(k)], receive(field, net, block, k), d,
                               *spec.profile);
          });
      }
      break;
    }
    case SchemeTag::Linear: {
      formula = linear_delay(spec.K, spec.L, rec.M, spec.N);
      const auto caches = lin_place(config, catalog);
      ff::Rng rng(spec.seed ^ kNetworkStream);
      auto H = sample_ntm(field, spec.K, spec.L, rng, &rec.ntm_resamples);
      for (const auto& d : demand_list) {
        std::optional<LinearDelivery> delivery;
        for (int attempt = 0; !delivery; ++attempt) {
          try {
            delivery = lin_deliver(config, field, catalog, d, H, rng, spec.singular_attempts);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::PrecoderNotFound) throw;
            if (attempt + 1 >= spec.ntm_attempts)
              throw Error(ErrorKind::PrecoderNotFound, "no zero-forcing precoders after " +
                                                           std::to_string(spec.ntm_attempts) +
                                                           " network draws; the field GF(2^" + std::to_string(spec.m) +
                                                           ") is too small");
            ++rec.precoder_retries;
            H = sample_ntm(field, spec.K, spec.L, rng, &rec.ntm_resamples);
          }
        }
        rec.singular_retries += delivery->singular_retries;
        out.slots = std::max(out.slots, delivery->block.slots());
        for (int k = 0; k < spec.K; ++k)
          decode_user(out, catalog, d[static_cast<std::size_t>(k)], [&] {
            return lin_decode(config, field, k, caches[static_cast<std::size_t>(k)],
                              lin_receive(field, H, delivery->block, k), d, H, delivery->precoders, delivery->record);
          });
      }
      break;
    }
  }

  rec.report = make_report(spec.scheme, formula, cutset_bound(spec.K, bound_servers, rec.M, spec.N), out.slots);
  rec.decode_failures = out.failures;
  rec.decode_ok = out.failures == 0 && rec.demand_vectors > 0;
  if (!rec.decode_ok) {
    rec.message = out.first_failure;
    if (spec.scheme == SchemeTag::Linear) rec.message += " (consider a larger field width m)";
  }
  rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<ScenarioSpec> corner_specs(const ScenarioSpec& base) {
  std::vector<ScenarioSpec> out;
  auto at = [&](const Rational& M) {
    ScenarioSpec s = base;
    s.M = M;
    out.push_back(std::move(s));
  };
  switch (base.scheme) {
    case SchemeTag::Single:
    case SchemeTag::Linear:
      for (int j = 0; j <= base.K; ++j) at(Rational(j * base.N, base.K));
      break;
    case SchemeTag::Dedicated: {
      const int group = (base.K + base.L - 1) / base.L;
      for (int j = 0; j <= group; ++j) at(Rational(j * base.N, group));
      break;
    }
    case SchemeTag::Flexible:
      for (const auto& corner : flexible_corner_set(base.K, base.L, base.N)) {
        ScenarioSpec s = base;
        s.M.reset();
        s.profile = corner.profile;
        out.push_back(std::move(s));
      }
      break;
  }
  return out;
}

std::vector<RunRecord> sweep_memory(const std::vector<ScenarioSpec>& points) {
  auto one = [](const ScenarioSpec& spec) {
    try {
      return run_scenario(spec);
    } catch (const Error& e) {
      RunRecord rec;
      rec.spec = spec;
      rec.M = spec.M.value_or(Rational(0));
      rec.error = e.kind();
      rec.message = e.what();
      return rec;
    }
  };
  std::vector<RunRecord> out(points.size());
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t begin = 0; begin < points.size(); begin += width) {
    const std::size_t end = std::min(points.size(), begin + width);
    std::vector<std::future<RunRecord>> running;
    for (std::size_t i = begin; i < end; ++i) running.push_back(std::async(std::launch::async, one, points[i]));
    for (std::size_t i = begin; i < end; ++i) out[i] = running[i - begin].get();
  }
  return out;
}

Rational measured_delay(const RunRecord& record) {
  if (!record.report.measured_slots || record.F_bits == 0) return Rational(0);
  return Rational(*record.report.measured_slots) * record.spec.m / record.F_bits;
}

std::vector<ExampleCheck> verify_examples() {
  struct Row {
    std::string name;
    ScenarioSpec spec;
    Rational expected;
  };
  auto make = [](SchemeTag scheme, int K, int L, int N, std::optional<Rational> M) {
    ScenarioSpec s;
    s.scheme = scheme;
    s.K = K;
    s.L = L;
    s.N = N;
    s.M = std::move(M);
    return s;
  };
  std::vector<Row> rows;
  const Rational two_server[] = {Rational(2), Rational(1), Rational(1, 2), Rational(1, 4), Rational(0)};
  const Rational three_server[] = {Rational(4, 3), Rational(3, 4), Rational(1, 2), Rational(1, 4), Rational(0)};
  for (int M = 0; M <= 4; ++M)
    rows.push_back({"linear K=4 L=2 M=" + std::to_string(M), make(SchemeTag::Linear, 4, 2, 4, Rational(M)), two_server[M]});
  for (int M = 0; M <= 4; ++M)
    rows.push_back({"linear K=4 L=3 M=" + std::to_string(M), make(SchemeTag::Linear, 4, 3, 4, Rational(M)), three_server[M]});
  rows.push_back({"single K=4 M=2", make(SchemeTag::Single, 4, 1, 4, Rational(2)), Rational(2, 3)});
  rows.push_back({"dedicated K=4 L=2 M=2", make(SchemeTag::Dedicated, 4, 2, 4, Rational(2)), Rational(1, 2)});
  Row flex{"flexible K=4 L=2 p=2,2", make(SchemeTag::Flexible, 4, 2, 4, std::nullopt), Rational(3, 4)};
  flex.spec.profile = PartitionProfile{{2, 2}, 0};
  rows.push_back(std::move(flex));
  rows.push_back({"linear K=3 L=2 M=1", make(SchemeTag::Linear, 3, 2, 3, Rational(1)), Rational(2, 3)});

  std::vector<ScenarioSpec> specs;
  for (const auto& r : rows) specs.push_back(r.spec);
  const auto records = sweep_memory(specs);
  std::vector<ExampleCheck> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& rec = records[i];
    ExampleCheck c{rows[i].name, rows[i].expected, measured_delay(rec), rec.decode_ok, false};
    c.pass = !rec.error && rec.decode_ok && c.measured == c.expected && rec.report.formula_delay == c.expected;
    out.push_back(std::move(c));
  }
  return out;
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParameterRejected:
    case ErrorKind::NonIntegralT:
    case ErrorKind::IndivisibleSplit:
    case ErrorKind::InvalidProfile:
    case ErrorKind::InvalidPartition:
    case ErrorKind::DomainError:
    case ErrorKind::LengthMismatch:
      return 3;
    case ErrorKind::PrecoderNotFound:
    case ErrorKind::SingularDecodeMatrix:
      return 4;
    case ErrorKind::DecodeFailure:
      return 2;
    default:
      return 1;
  }
}

int exit_code(const std::vector<RunRecord>& records) noexcept {
  int code = 0;
  for (const auto& r : records) {
    if (r.error) code = std::max(code, exit_code(*r.error));
    else if (!r.decode_ok) code = std::max(code, 2);
  }
  return code;
}

}  // namespace mscc
