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

#include "mscc/harness.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mscc {

inline constexpr const char* kCsvHeader =
    "scheme,K,L,N,M_num,M_den,F_bits,m,measured_slots,formula_delay_num,formula_delay_den,lower_bound_num,"
    "lower_bound_den,gap_num,gap_den,decode_ok,seed";

std::string csv_row(const RunRecord& record);
std::string csv_text(const std::vector<RunRecord>& records);

/// One line: point count, decode status and worst gap.
std::string summary_line(const std::vector<RunRecord>& records);

/// Writes the CSV to `path` and the summary line to `summary`.
/// Throws Error(IOError).
void emit_report(const std::vector<RunRecord>& records, const std::string& path, std::ostream& summary);

}  // namespace mscc
