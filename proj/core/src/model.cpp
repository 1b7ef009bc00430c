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

#include "mscc/model.hpp"

#include "mscc/errors.hpp"
#include "mscc/linalg.hpp"

#include <algorithm>

namespace mscc {

std::string_view to_string(SchemeTag tag) noexcept {
  switch (tag) {
    case SchemeTag::Single: return "single";
    case SchemeTag::Dedicated: return "dedicated";
    case SchemeTag::Flexible: return "flexible";
    case SchemeTag::Linear: return "linear";
  }
  return "unknown";
}

SchemeTag parse_scheme(std::string_view name) {
  if (name == "single") return SchemeTag::Single;
  if (name == "dedicated") return SchemeTag::Dedicated;
  if (name == "flexible") return SchemeTag::Flexible;
  if (name == "linear") return SchemeTag::Linear;
  throw Error(ErrorKind::ParameterRejected, "unknown scheme '" + std::string(name) + "'");
}

void ScenarioConfig::validate() const {
  auto reject = [](const std::string& why) { throw Error(ErrorKind::ParameterRejected, why); };
  if (K < 1) reject("K must be positive");
  if (L < 1) reject("L must be positive");
  if (N < K) reject("N >= K is required (N=" + std::to_string(N) + ", K=" + std::to_string(K) + ")");
  if (M < 0 || M > N) reject("M must lie in [0, N], got " + mscc::to_string(M));
  if (m < 1 || m > 32) reject("symbol width m must lie in [1, 32]");
  if (F_bits <= 0) reject("F must be positive");
  if (F_bits % m != 0) reject("F=" + std::to_string(F_bits) + " is not divisible by m=" + std::to_string(m));
}

void validate_demands(const DemandVector& demands, int K, int N) {
  if (static_cast<int>(demands.size()) != K)
    throw Error(ErrorKind::ParameterRejected,
                "expected " + std::to_string(K) + " demands, got " + std::to_string(demands.size()));
  for (int d : demands)
    if (d < 0 || d >= N) throw Error(ErrorKind::ParameterRejected, "demand out of range: " + std::to_string(d + 1));
}

FileCatalog::FileCatalog(std::vector<std::vector<Element>> files) : files_(std::move(files)) {
  symbols_ = files_.empty() ? 0 : static_cast<std::int64_t>(files_[0].size());
  for (const auto& f : files_)
    if (static_cast<std::int64_t>(f.size()) != symbols_)
      throw Error(ErrorKind::LengthMismatch, "all files must have the same length");
}

FileCatalog FileCatalog::random(const ff::Field& field, int N, std::int64_t symbols, std::uint64_t seed) {
  ff::Rng rng(seed);
  std::vector<std::vector<Element>> files;
  files.reserve(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) files.push_back(ff::random_vector(field, static_cast<std::size_t>(symbols), rng));
  return FileCatalog(std::move(files));
}

std::string PieceKey::to_string() const {
  return "W" + std::to_string(file + 1) + "|" + subset_label(where.subset) + "|s" + std::to_string(where.server + 1) +
         "|c" + std::to_string(where.copy + 1);
}

void SplitPlan::append(PieceLocator where, std::int64_t length) {
  const std::int64_t offset = pieces_.empty() ? 0 : pieces_.back().second.offset + pieces_.back().second.length;
  index_.emplace(where, pieces_.size());
  pieces_.emplace_back(std::move(where), SymbolRange{offset, length});
}

std::optional<SymbolRange> SplitPlan::find(const PieceLocator& where) const {
  auto it = index_.find(where);
  if (it == index_.end()) return std::nullopt;
  return pieces_[it->second].second;
}

bool SplitPlan::is_valid() const {
  if (index_.size() != pieces_.size()) return false;
  if (pieces_.empty()) return file_symbols_ == 0;
  std::vector<SymbolRange> ranges;
  for (const auto& [_, r] : pieces_) ranges.push_back(r);
  std::sort(ranges.begin(), ranges.end(), [](auto a, auto b) { return a.offset < b.offset; });
  std::int64_t cursor = 0;
  for (const auto& r : ranges) {
    if (r.offset != cursor || r.length != ranges[0].length || r.length <= 0) return false;
    cursor += r.length;
  }
  return cursor == file_symbols_;
}

std::int64_t equal_share(std::int64_t total, std::int64_t parts, std::string_view what) {
  if (parts <= 0 || total % parts != 0)
    throw Error(ErrorKind::IndivisibleSplit, std::string(what) + ": " + std::to_string(total) +
                                                 " symbols cannot be cut into " + std::to_string(parts) +
                                                 " equal pieces");
  return total / parts;
}

std::vector<std::pair<PieceKey, std::vector<Element>>> split_file(const FileCatalog& catalog, const SplitPlan& plan,
                                                                  int file_id) {
  if (catalog.file_symbols() != plan.file_symbols())
    throw Error(ErrorKind::IndivisibleSplit, "plan and catalog disagree on file length");
  const auto file = catalog.file(file_id);
  std::vector<std::pair<PieceKey, std::vector<Element>>> out;
  out.reserve(plan.piece_count());
  for (const auto& [where, range] : plan.pieces()) {
    auto first = file.begin() + range.offset;
    out.emplace_back(PieceKey{file_id, where}, std::vector<Element>(first, first + range.length));
  }
  return out;
}

std::vector<Element> assemble_file(const SplitPlan& plan,
                                   const std::function<std::span<const Element>(const PieceLocator&)>& piece) {
  std::vector<Element> out(static_cast<std::size_t>(plan.file_symbols()));
  for (const auto& [where, range] : plan.pieces()) {
    auto symbols = piece(where);
    if (static_cast<std::int64_t>(symbols.size()) != range.length)
      throw Error(ErrorKind::DecodeFailure, "piece " + subset_label(where.subset) + " unavailable or truncated");
    std::copy(symbols.begin(), symbols.end(), out.begin() + range.offset);
  }
  return out;
}

void CacheContents::store(PieceKey key, std::vector<Element> symbols) {
  const auto n = static_cast<std::int64_t>(symbols.size());
  auto [it, inserted] = pieces_.insert_or_assign(std::move(key), std::move(symbols));
  (void)it;
  if (inserted) symbols_ += n;
}

std::optional<std::span<const Element>> CacheContents::lookup(const PieceKey& key) const {
  auto it = pieces_.find(key);
  if (it == pieces_.end()) return std::nullopt;
  return std::span<const Element>(it->second);
}

std::int64_t memory_used(const CacheContents& cache) {
  return cache.symbols_used() * static_cast<std::int64_t>(cache.symbol_bits());
}

std::vector<CacheContents> place_by_rule(const FileCatalog& catalog, const SplitPlan& plan, int users,
                                         unsigned symbol_bits,
                                         const std::function<bool(int, const PieceLocator&)>& keep) {
  std::vector<CacheContents> caches;
  caches.reserve(static_cast<std::size_t>(users));
  for (int k = 0; k < users; ++k) caches.emplace_back(k, symbol_bits);
  for (int n = 0; n < catalog.size(); ++n) {
    for (auto& [key, symbols] : split_file(catalog, plan, n)) {
      for (int k = 0; k < users; ++k)
        if (keep(k, key.where)) caches[static_cast<std::size_t>(k)].store(key, symbols);
    }
  }
  return caches;
}

}  // namespace mscc
