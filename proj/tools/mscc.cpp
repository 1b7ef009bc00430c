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
#include "mscc/report.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>

namespace {

struct Options {
  std::string scheme = "linear";
  int K = 4;
  int L = 2;
  int N = 4;
  std::string M;
  unsigned m = 16;
  std::uint64_t seed = 1;
  std::string demands = "all-distinct";
  std::string profile;
  std::string out;
  std::int64_t F = 0;
  bool force = false;
  int attempts = 8;
};

mscc::ScenarioSpec to_spec(const Options& o) {
  mscc::ScenarioSpec spec;
  spec.scheme = mscc::parse_scheme(o.scheme);
  spec.K = o.K;
  spec.L = o.L;
  spec.N = o.N;
  if (!o.M.empty()) spec.M = mscc::parse_rational(o.M);
  if (!o.profile.empty()) spec.profile = mscc::parse_profile(o.profile);
  spec.demands = mscc::parse_demands(o.demands);
  spec.m = o.m;
  spec.seed = o.seed;
  spec.F_bits = o.F;
  spec.force = o.force;
  spec.singular_attempts = o.attempts;
  spec.out = o.out;
  return spec;
}

void log_record(const mscc::RunRecord& r) {
  std::cerr << "[mscc] " << mscc::to_string(r.spec.scheme) << " K=" << r.spec.K << " L=" << r.spec.L
            << " N=" << r.spec.N << " M=" << mscc::to_string(r.M);
  if (r.error) {
    std::cerr << " rejected: " << r.message << '\n';
    return;
  }
  std::cerr << " F=" << r.F_bits << " slots=" << r.report.measured_slots.value_or(0)
            << " delay=" << mscc::to_string(mscc::measured_delay(r))
            << " formula=" << mscc::to_string(r.report.formula_delay) << " decode=" << (r.decode_ok ? "ok" : "FAILED");
  if (r.precoder_retries + r.singular_retries + r.ntm_resamples > 0)
    std::cerr << " retries(precoder=" << r.precoder_retries << ", singular=" << r.singular_retries
              << ", ntm=" << r.ntm_resamples << ")";
  if (!r.message.empty()) std::cerr << " (" << r.message << ")";
  std::cerr << " " << std::fixed << std::setprecision(3) << r.wall_seconds << "s\n";
}

int report(const std::vector<mscc::RunRecord>& records, const std::string& out) {
  for (const auto& r : records) log_record(r);
  if (out.empty()) std::cout << mscc::csv_text(records);
  mscc::emit_report(records, out, std::cout);
  return mscc::exit_code(records);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-server coded caching simulator"};
  app.set_config("--config", "", "Flat key=value file; command-line flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--scheme", o.scheme, "single | dedicated | flexible | linear")->capture_default_str();
  app.add_option("--K", o.K, "Number of users")->capture_default_str();
  app.add_option("--L", o.L, "Number of servers")->capture_default_str();
  app.add_option("--N", o.N, "Number of files")->capture_default_str();
  app.add_option("--M", o.M, "Cache size in files (p, p/q or decimal)");
  app.add_option("--m", o.m, "Symbol width in bits")->capture_default_str();
  app.add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  app.add_option("--demands", o.demands, "explicit list | all-distinct | sweep | random:COUNT")
      ->capture_default_str()
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--profile", o.profile, "Flexible partition profile, e.g. 2,2 or 2,2+Q1")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--out", o.out, "CSV output path (stdout when empty)");
  app.add_option("--F", o.F, "File size in bits (0 picks the minimum)")->capture_default_str();
  app.add_option("--attempts", o.attempts, "Coefficient draws per linear block")->capture_default_str();
  app.add_flag("--force", o.force, "Lift the desk-scale guardrail");

  auto* run = app.add_subcommand("run", "Simulate one scenario");
  auto* sweep = app.add_subcommand("sweep", "Simulate every corner memory of a scheme");
  auto* verify = app.add_subcommand("verify-paper", "Check the built-in reference scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*run) return report({mscc::run_scenario(to_spec(o))}, o.out);
    if (*sweep) return report(mscc::sweep_memory(mscc::corner_specs(to_spec(o))), o.out);
    if (*verify) {
      bool all = true;
      for (const auto& c : mscc::verify_examples()) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": measured " << mscc::to_string(c.measured)
                  << ", expected " << mscc::to_string(c.expected) << (c.decode_ok ? "" : ", decode failed") << '\n';
        all = all && c.pass;
      }
      return all ? 0 : 2;
    }
  } catch (const mscc::Error& e) {
    std::cerr << "mscc: " << e.what() << '\n';
    return mscc::exit_code(e.kind());
  }
  return 0;
}
