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

#include "mscc/errors.hpp"
#include "mscc/harness.hpp"
#include "mscc/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

using namespace mscc;

ScenarioSpec spec(SchemeTag scheme, int K, int L, int N, std::optional<Rational> M) {
  ScenarioSpec s;
  s.scheme = scheme;
  s.K = K;
  s.L = L;
  s.N = N;
  s.M = std::move(M);
  return s;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IOError;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

TEST(Harness, DemandParsing) {
  EXPECT_EQ(parse_demands("all-distinct").mode, DemandMode::AllDistinct);
  EXPECT_EQ(parse_demands("random:7").count, 7);
  EXPECT_EQ(parse_demands("2,1,4").explicit_demands, (DemandVector{1, 0, 3}));
  EXPECT_EQ(to_string(parse_demands("2,1,4")), "2,1,4");
  EXPECT_THROW(parse_demands("random:x"), Error);
  EXPECT_THROW(parse_demands("1,,2"), Error);
  EXPECT_EQ(expand_demands(parse_demands("sweep"), 3, 4, 1).size(), 64u);
  EXPECT_EQ(expand_demands(parse_demands("random:5"), 4, 4, 9), expand_demands(parse_demands("random:5"), 4, 4, 9));
  EXPECT_EQ(expand_demands({}, 3, 5, 1)[0], (DemandVector{0, 1, 2}));
}

TEST(Harness, MinimalFileSizes) {
  EXPECT_EQ(minimal_file_bits(spec(SchemeTag::Linear, 3, 2, 3, Rational(1))), 16 * 3);
  EXPECT_EQ(minimal_file_bits(spec(SchemeTag::Linear, 4, 2, 4, Rational(1))), 16 * 8);
  EXPECT_EQ(minimal_file_bits(spec(SchemeTag::Single, 4, 1, 4, Rational(2))), 16 * 6);
  EXPECT_EQ(minimal_file_bits(spec(SchemeTag::Dedicated, 4, 2, 4, Rational(2))), 16 * 2);
  auto flex = spec(SchemeTag::Flexible, 4, 2, 4, std::nullopt);
  flex.profile = PartitionProfile{{2, 2}, 0};
  EXPECT_EQ(minimal_file_bits(flex), 16 * 8);
}

TEST(Harness, ExampleFiveRun) {
  const auto rec = run_scenario(spec(SchemeTag::Linear, 3, 2, 3, Rational(1)));
  EXPECT_TRUE(rec.decode_ok);
  EXPECT_EQ(rec.decode_failures, 0);
  EXPECT_EQ(rec.report.formula_delay, Rational(2, 3));
  EXPECT_EQ(measured_delay(rec), Rational(2, 3));
}

TEST(Harness, FlexibleTwoByTwoRun) {
  auto s = spec(SchemeTag::Flexible, 4, 2, 4, std::nullopt);
  s.profile = PartitionProfile{{2, 2}, 0};
  const auto rec = run_scenario(s);
  EXPECT_EQ(rec.M, 1);
  EXPECT_EQ(measured_delay(rec), Rational(3, 4));
  ASSERT_TRUE(rec.report.gap.has_value());
  EXPECT_EQ(*rec.report.gap, 1);
  EXPECT_TRUE(rec.decode_ok);
}

TEST(Harness, FullMemoryEveryScheme) {
  for (auto scheme : {SchemeTag::Single, SchemeTag::Dedicated, SchemeTag::Linear}) {
    const auto rec = run_scenario(spec(scheme, 4, 2, 4, Rational(4)));
    EXPECT_TRUE(rec.decode_ok);
    EXPECT_EQ(rec.report.formula_delay, 0);
    EXPECT_EQ(measured_delay(rec), 0);
  }
}

TEST(Harness, RejectionsNameTheProblem) {
  EXPECT_EQ(kind_of([] { run_scenario(spec(SchemeTag::Linear, 4, 2, 4, Rational(1, 2))); }), ErrorKind::NonIntegralT);
  auto big = spec(SchemeTag::Linear, 13, 2, 13, Rational(0));
  EXPECT_EQ(kind_of([&] { run_scenario(big); }), ErrorKind::ParameterRejected);
  auto odd_f = spec(SchemeTag::Linear, 4, 2, 4, Rational(1));
  odd_f.F_bits = 16 * 12;
  EXPECT_EQ(kind_of([&] { run_scenario(odd_f); }), ErrorKind::IndivisibleSplit);
  auto flex = spec(SchemeTag::Flexible, 4, 2, 4, Rational(2));
  flex.profile = PartitionProfile{{2, 2}, 0};
  EXPECT_EQ(kind_of([&] { run_scenario(flex); }), ErrorKind::ParameterRejected);
  flex.profile.reset();
  EXPECT_EQ(kind_of([&] { run_scenario(flex); }), ErrorKind::ParameterRejected);
  EXPECT_EQ(exit_code(ErrorKind::NonIntegralT), 3);
  EXPECT_EQ(exit_code(ErrorKind::PrecoderNotFound), 4);
  EXPECT_EQ(exit_code(ErrorKind::DecodeFailure), 2);
}

TEST(Harness, MultipleOfMinimalFileSize) {
  auto s = spec(SchemeTag::Linear, 4, 3, 4, Rational(1));
  s.F_bits = 3 * minimal_file_bits(s);
  const auto rec = run_scenario(s);
  EXPECT_TRUE(rec.decode_ok);
  EXPECT_EQ(measured_delay(rec), Rational(3, 4));
}

TEST(Harness, CsvIsDeterministic) {
  auto s = spec(SchemeTag::Linear, 4, 2, 4, Rational(1));
  s.demands = parse_demands("random:3");
  s.seed = 42;
  EXPECT_EQ(csv_text({run_scenario(s)}), csv_text({run_scenario(s)}));
}

TEST(Harness, ReportShapes) {
  EXPECT_EQ(csv_text({}), std::string(kCsvHeader) + "\n");
  const auto one = csv_text({run_scenario(spec(SchemeTag::Dedicated, 4, 2, 4, Rational(2)))});
  const auto rows = lines(one);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(fields(rows[0]).size(), 17u);
  EXPECT_EQ(rows[1], "dedicated,4,2,4,2,1,32,16,1,1,2,1,2,1,1,1,1");
}

TEST(Harness, SweepOfFiveCornersIsMonotone) {
  const auto records = sweep_memory(corner_specs(spec(SchemeTag::Linear, 4, 2, 4, std::nullopt)));
  const auto path = (std::filesystem::temp_directory_path() / "mscc_sweep_test.csv").string();
  std::ostringstream summary;
  emit_report(records, path, summary);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto rows = lines(buf.str());
  ASSERT_EQ(rows.size(), 6u);
  Rational prev = -1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    const Rational T{BigInt(f[9]), BigInt(f[10])};
    const Rational bound{BigInt(f[11]), BigInt(f[12])};
    EXPECT_LE(bound, T);
    if (prev >= 0) EXPECT_LE(T, prev);
    prev = T;
    EXPECT_EQ(f[15], "1");
  }
  EXPECT_NE(summary.str().find("5 point(s)"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_THROW(emit_report(records, "/nonexistent-dir/x.csv", summary), Error);
}

TEST(Harness, SweepRecordsPerPointErrors) {
  auto bad = spec(SchemeTag::Linear, 4, 2, 4, Rational(1, 2));
  const auto records = sweep_memory({spec(SchemeTag::Linear, 4, 2, 4, Rational(1)), bad});
  ASSERT_EQ(records.size(), 2u);
  EXPECT_TRUE(records[0].decode_ok);
  ASSERT_TRUE(records[1].error.has_value());
  EXPECT_EQ(*records[1].error, ErrorKind::NonIntegralT);
  EXPECT_EQ(exit_code(records), 3);
}

TEST(Harness, ThreeUserLowerBoundCurve) {
  for (const auto& s : corner_specs(spec(SchemeTag::Linear, 3, 2, 3, std::nullopt))) {
    const auto rec = run_scenario(s);
    const Rational& M = rec.M;
    EXPECT_EQ(rec.report.lower_bound, std::max({1 - M / 3, (3 - 3 * M) / 2, 1 - M, Rational(0)}));
  }
}

TEST(Harness, FlexibleCornerSweep) {
  auto base = spec(SchemeTag::Flexible, 6, 2, 6, std::nullopt);
  const auto records = sweep_memory(corner_specs(base));
  const auto corners = flexible_corner_set(6, 2, 6);
  ASSERT_EQ(records.size(), corners.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i].M, corners[i].point.M);
    EXPECT_EQ(measured_delay(records[i]), corners[i].point.T);
    EXPECT_TRUE(records[i].decode_ok);
  }
}

TEST(Harness, VerifyExamplesAllPass) {
  for (const auto& c : verify_examples()) EXPECT_TRUE(c.pass) << c.name;
}

TEST(Harness, NegativeControlAtSmallField) {
  int failing = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto s = spec(SchemeTag::Linear, 4, 2, 4, Rational(1));
    s.m = 4;
    s.seed = seed;
    s.singular_attempts = 1;
    s.ntm_attempts = 1;
    const auto rec = sweep_memory({s})[0];
    if (rec.error) {
      EXPECT_EQ(exit_code(*rec.error), 4);
      ++failing;
    } else if (!rec.decode_ok) {
      EXPECT_GT(rec.decode_failures, 0);
      EXPECT_FALSE(rec.message.empty());
      ++failing;
    }
  }
  EXPECT_GT(failing, 0);
}

}  // namespace
