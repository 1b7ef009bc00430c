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

#include "mscc/bounds.hpp"
#include "mscc/errors.hpp"
#include "mscc/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mscc {

enum class DemandMode { Explicit, AllDistinct, Sweep, Random };

struct DemandSpec {
  DemandMode mode = DemandMode::AllDistinct;
  DemandVector explicit_demands;  // zero-based
  int count = 0;                  // random:count
};

/// "all-distinct", "sweep", "random:COUNT" or a one-based list "1,2,3,4".
DemandSpec parse_demands(const std::string& text);
std::string to_string(const DemandSpec& spec);

/// Every demand vector the spec stands for. Sweeps over more than 2^20
/// vectors are rejected.
std::vector<DemandVector> expand_demands(const DemandSpec& spec, int K, int N, std::uint64_t seed);

struct ScenarioSpec {
  SchemeTag scheme = SchemeTag::Linear;
  int K = 4;
  int L = 2;
  int N = 4;
  /// Required except for flexible runs, where the profile fixes it.
  std::optional<Rational> M;
  std::optional<PartitionProfile> profile;
  DemandSpec demands;
  unsigned m = 16;
  std::uint64_t seed = 1;
  /// 0 selects the minimal admissible F.
  std::int64_t F_bits = 0;
  bool force = false;
  /// Coefficient draws per subset (1 disables the singular-matrix retry).
  int singular_attempts = 8;
  /// NTM draws before giving up on precoder design.
  int ntm_attempts = 8;
  std::string out;
};

struct RunRecord {
  ScenarioSpec spec;
  Rational M;
  std::int64_t F_bits = 0;
  DelayReport report;
  bool decode_ok = false;
  int decode_failures = 0;
  int demand_vectors = 0;
  int precoder_retries = 0;
  int singular_retries = 0;
  int ntm_resamples = 0;
  double wall_seconds = 0;
  /// Set when the point was rejected or aborted (sweeps keep going).
  std::optional<ErrorKind> error;
  std::string message;
};

/// Memory actually used by the scheme: spec.M, or the profile's memory for
/// flexible runs. Throws Error(ParameterRejected) when they disagree.
Rational scenario_memory(const ScenarioSpec& spec);

/// m times the lcm of the scheme's split denominators.
std::int64_t minimal_file_bits(const ScenarioSpec& spec);

/// Full pipeline for every demand vector of the spec: placement, delivery,
/// reception, per-user decode with bit comparison. Throws Error on
/// rejected parameters and on precoder-design exhaustion.
RunRecord run_scenario(const ScenarioSpec& spec);

/// Corner memories of the scheme: j N / K (single, linear), j N L / K'
/// (dedicated) or the flexible corner set (profile set per point).
std::vector<ScenarioSpec> corner_specs(const ScenarioSpec& base);

/// Runs every point concurrently; per-point errors are recorded in the
/// record. Output order follows `points`.
std::vector<RunRecord> sweep_memory(const std::vector<ScenarioSpec>& points);

struct ExampleCheck {
  std::string name;
  Rational expected;
  Rational measured;
  bool decode_ok = false;
  bool pass = false;
};

/// Reference tables (L = 2 and L = 3 at K = N = 4) plus the worked
/// examples of the single, dedicated, flexible and linear schemes.
std::vector<ExampleCheck> verify_examples();

/// Measured delay in units of F/m.
Rational measured_delay(const RunRecord& record);

/// 0 pass, 2 decode failure, 3 rejected parameters, 4 field too small.
int exit_code(ErrorKind kind) noexcept;
int exit_code(const std::vector<RunRecord>& records) noexcept;

}  // namespace mscc
