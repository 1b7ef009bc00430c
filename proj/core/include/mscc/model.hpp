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

#include "mscc/combinatorics.hpp"
#include "mscc/field.hpp"
#include "mscc/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mscc {

using ff::Element;

enum class SchemeTag { Single, Dedicated, Flexible, Linear };

std::string_view to_string(SchemeTag tag) noexcept;
/// Throws Error(ParameterRejected) on unknown names.
SchemeTag parse_scheme(std::string_view name);

/// K users, L servers, N files of F bits, per-user cache of M files, m-bit
/// symbols. Indices of users and files are zero-based throughout the library.
struct ScenarioConfig {
  int K = 4;
  int L = 1;
  int N = 4;
  Rational M = 0;
  std::int64_t F_bits = 0;
  unsigned m = 16;
  std::uint64_t seed = 1;

  std::int64_t file_symbols() const { return F_bits / m; }
  /// Global caching parameter K*M/N; not necessarily integral.
  Rational t() const { return M * K / N; }

  /// Throws Error(ParameterRejected) naming the violated condition.
  void validate() const;
};

/// One demanded file index per user.
using DemandVector = std::vector<int>;

void validate_demands(const DemandVector& demands, int K, int N);

/// The content library: N files of equal symbol length.
class FileCatalog {
 public:
  FileCatalog() = default;
  explicit FileCatalog(std::vector<std::vector<Element>> files);

  /// Seeded pseudorandom contents.
  static FileCatalog random(const ff::Field& field, int N, std::int64_t symbols, std::uint64_t seed);

  int size() const noexcept { return static_cast<int>(files_.size()); }
  std::int64_t file_symbols() const noexcept { return symbols_; }
  std::span<const Element> file(int n) const { return files_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<std::vector<Element>> files_;
  std::int64_t symbols_ = 0;
};

/// Identifies a piece inside one file: the user-subset label, the server (or
/// dedicated group) it belongs to, and the copy (mini/pico) index.
struct PieceLocator {
  Subset subset;
  int server = 0;
  int copy = 0;

  auto operator<=>(const PieceLocator&) const = default;
};

/// A piece of a specific file.
struct PieceKey {
  int file = 0;
  PieceLocator where;

  auto operator<=>(const PieceKey&) const = default;

  /// Canonical rendering, one-based: "W2|1,3|s1|c2".
  std::string to_string() const;
};

struct SymbolRange {
  std::int64_t offset = 0;
  std::int64_t length = 0;
};

/// How every file of the library is cut into pieces. The same layout applies
/// to each file; pieces are stored in plan (concatenation) order.
class SplitPlan {
 public:
  SplitPlan(SchemeTag tag, std::int64_t file_symbols) : tag_(tag), file_symbols_(file_symbols) {}

  /// Appends a piece of `length` symbols directly after the previous one.
  void append(PieceLocator where, std::int64_t length);

  SchemeTag tag() const noexcept { return tag_; }
  std::int64_t file_symbols() const noexcept { return file_symbols_; }
  std::size_t piece_count() const noexcept { return pieces_.size(); }
  const std::vector<std::pair<PieceLocator, SymbolRange>>& pieces() const noexcept { return pieces_; }
  std::optional<SymbolRange> find(const PieceLocator& where) const;

  /// Disjoint, covering [0, file_symbols), all pieces the same length.
  bool is_valid() const;

 private:
  SchemeTag tag_;
  std::int64_t file_symbols_;
  std::vector<std::pair<PieceLocator, SymbolRange>> pieces_;
  std::map<PieceLocator, std::size_t> index_;
};

/// Cuts `total` symbols into `parts` equal pieces; throws
/// Error(IndivisibleSplit) when that is impossible.
std::int64_t equal_share(std::int64_t total, std::int64_t parts, std::string_view what);

std::vector<std::pair<PieceKey, std::vector<Element>>> split_file(const FileCatalog& catalog, const SplitPlan& plan,
                                                                  int file_id);

/// Reassembles a file from its pieces in plan order; missing pieces throw
/// Error(DecodeFailure).
std::vector<Element> assemble_file(const SplitPlan& plan,
                                   const std::function<std::span<const Element>(const PieceLocator&)>& piece);

/// Z_k: the pieces stored by one user.
class CacheContents {
 public:
  CacheContents() = default;
  CacheContents(int user, unsigned symbol_bits) : user_(user), symbol_bits_(symbol_bits) {}

  int user() const noexcept { return user_; }
  void store(PieceKey key, std::vector<Element> symbols);
  /// Empty optional when the key is not cached.
  std::optional<std::span<const Element>> lookup(const PieceKey& key) const;
  bool has(const PieceKey& key) const { return pieces_.contains(key); }
  std::size_t key_count() const noexcept { return pieces_.size(); }
  std::int64_t symbols_used() const noexcept { return symbols_; }
  unsigned symbol_bits() const noexcept { return symbol_bits_; }
  const std::map<PieceKey, std::vector<Element>>& pieces() const noexcept { return pieces_; }

 private:
  int user_ = 0;
  unsigned symbol_bits_ = 16;
  std::int64_t symbols_ = 0;
  std::map<PieceKey, std::vector<Element>> pieces_;

};

inline std::optional<std::span<const Element>> cache_lookup(const CacheContents& cache, const PieceKey& key) {
  return cache.lookup(key);
}

/// Stored bits.
std::int64_t memory_used(const CacheContents& cache);

/// Fills caches for `users` users: user k stores piece (n, where) of every
/// file n exactly when `keep(k, where)` holds.
std::vector<CacheContents> place_by_rule(const FileCatalog& catalog, const SplitPlan& plan, int users,
                                         unsigned symbol_bits,
                                         const std::function<bool(int, const PieceLocator&)>& keep);

}  // namespace mscc
