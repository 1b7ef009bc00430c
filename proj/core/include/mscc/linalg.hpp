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

#include "mscc/field.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace mscc::ff {

using FieldVector = std::vector<Element>;

/// Dense row-major matrix of field symbols.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Element> data);

  static FieldMatrix identity(std::size_t n);
  static FieldMatrix from_rows(std::span<const FieldVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  FieldVector row_vector(std::size_t r) const;
  FieldVector column(std::size_t c) const;

  const std::vector<Element>& data() const noexcept { return data_; }

  /// Appends the columns of `other` (same row count) to the right.
  void append_columns(const FieldMatrix& other);

  bool operator==(const FieldMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Deterministic randomness handle used by every randomized operation.
using Rng = std::mt19937_64;

/// Uniform symbol; exact because q is a power of two.
inline Element random_element(const Field& f, Rng& rng) { return static_cast<Element>(rng()) & f.mask(); }
Element random_nonzero(const Field& f, Rng& rng);
FieldVector random_vector(const Field& f, std::size_t n, Rng& rng);
FieldMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);

/// Throws Error(LengthMismatch) when lengths differ.
Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b);

FieldMatrix multiply(const Field& f, const FieldMatrix& a, const FieldMatrix& b);
FieldVector multiply(const Field& f, const FieldMatrix& a, std::span<const Element> x);

/// dst[i] ^= c * src[i]
void axpy(const Field& f, Element c, std::span<const Element> src, std::span<Element> dst);
void scale(const Field& f, Element c, std::span<Element> v);

std::size_t rank(const Field& f, FieldMatrix m);

/// Solves A x = y for square, invertible A. Throws Error(SingularMatrix).
FieldVector solve_square(const Field& f, FieldMatrix a, std::span<const Element> y);
/// Solves A X = Y column by column; Y has A.rows() rows.
FieldMatrix solve_square(const Field& f, FieldMatrix a, FieldMatrix y);

/// Basis of {v : row . v = 0 for every row}. Elimination picks the first
/// nonzero column as pivot, so the output is deterministic.
std::vector<FieldVector> nullspace_basis(const Field& f, std::span<const FieldVector> rows, std::size_t dim);

/// Draws u orthogonal to every vector of `perp_set` and non-orthogonal to
/// every vector of `nonperp_set` as a random combination of the nullspace
/// basis of `perp_set`. Throws Error(PrecoderNotFound) after `max_retries`
/// unsuccessful draws.
FieldVector constrained_precoder(const Field& f, std::span<const FieldVector> perp_set,
                                 std::span<const FieldVector> nonperp_set, std::size_t dim, Rng& rng,
                                 int max_retries = 64);

}  // namespace mscc::ff
