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

#include "mscc/report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace mscc {

std::string csv_row(const RunRecord& r) {
  std::ostringstream out;
  const auto& rep = r.report;
  out << to_string(r.spec.scheme) << ',' << r.spec.K << ',' << r.spec.L << ',' << r.spec.N << ',' << numer(r.M) << ','
      << denom(r.M) << ',' << r.F_bits << ',' << r.spec.m << ',';
  if (rep.measured_slots) out << *rep.measured_slots;
  out << ',';
  if (r.error) {
    out << ",,,,,,0," << r.spec.seed;
    return out.str();
  }
  out << numer(rep.formula_delay) << ',' << denom(rep.formula_delay) << ',' << numer(rep.lower_bound) << ','
      << denom(rep.lower_bound) << ',';
  if (rep.gap) out << numer(*rep.gap) << ',' << denom(*rep.gap);
  else out << ',';
  out << ',' << (r.decode_ok ? 1 : 0) << ',' << r.spec.seed;
  return out.str();
}

std::string csv_text(const std::vector<RunRecord>& records) {
  std::string text = std::string(kCsvHeader) + "\n";
  for (const auto& r : records) text += csv_row(r) + "\n";
  return text;
}

std::string summary_line(const std::vector<RunRecord>& records) {
  int decoded = 0, errors = 0;
  std::optional<Rational> worst;
  for (const auto& r : records) {
    if (r.error) ++errors;
    else if (r.decode_ok) ++decoded;
    if (r.report.gap && (!worst || *r.report.gap > *worst)) worst = r.report.gap;
  }
  std::ostringstream out;
  out << records.size() << " point(s): " << decoded << " decoded, " << errors << " rejected";
  if (worst) out << ", max gap " << to_string(*worst);
  return out.str();
}

void emit_report(const std::vector<RunRecord>& records, const std::string& path, std::ostream& summary) {
  if (!path.empty()) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::IOError, "cannot open " + path);
    file << csv_text(records);
    if (!file.flush()) throw Error(ErrorKind::IOError, "write failed: " + path);
  }
  summary << summary_line(records) << '\n';
}

}  // namespace mscc
