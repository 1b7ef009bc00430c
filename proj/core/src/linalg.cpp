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

#include "mscc/linalg.hpp"

#include "mscc/errors.hpp"

#include <string>
#include <utility>

namespace mscc::ff {

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Element> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorKind::LengthMismatch, "matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                               std::to_string(rows_ * cols_));
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(std::span<const FieldVector> rows) {
  if (rows.empty()) return {};
  FieldMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorKind::LengthMismatch, "ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

FieldVector FieldMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

FieldVector FieldMatrix::column(std::size_t c) const {
  FieldVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void FieldMatrix::append_columns(const FieldMatrix& other) {
  if (other.cols_ == 0) return;
  if (cols_ == 0 && rows_ == 0) {
    *this = other;
    return;
  }
  if (other.rows_ != rows_) throw Error(ErrorKind::LengthMismatch, "row count mismatch in append_columns");
  std::vector<Element> merged(rows_ * (cols_ + other.cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    auto dst = merged.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + other.cols_));
    auto a = row(r);
    auto b = other.row(r);
    dst = std::copy(a.begin(), a.end(), dst);
    std::copy(b.begin(), b.end(), dst);
  }
  cols_ += other.cols_;
  data_ = std::move(merged);
}

Element random_nonzero(const Field& f, Rng& rng) {
  for (;;) {
    if (Element e = random_element(f, rng); e != 0) return e;
  }
}

FieldVector random_vector(const Field& f, std::size_t n, Rng& rng) {
  FieldVector v(n);
  for (auto& e : v) e = random_element(f, rng);
  return v;
}

FieldMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  return FieldMatrix(rows, cols, random_vector(f, rows * cols, rng));
}

Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::LengthMismatch,
                "dot of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  Element acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc ^= f.mul(a[i], b[i]);
  return acc;
}

FieldMatrix multiply(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::LengthMismatch, "matrix product shape mismatch");
  FieldMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (Element c = a(i, k); c != 0) axpy(f, c, b.row(k), out.row(i));
  return out;
}

FieldVector multiply(const Field& f, const FieldMatrix& a, std::span<const Element> x) {
  if (a.cols() != x.size()) throw Error(ErrorKind::LengthMismatch, "matrix-vector shape mismatch");
  FieldVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(f, a.row(i), x);
  return out;
}

void axpy(const Field& f, Element c, std::span<const Element> src, std::span<Element> dst) {
  if (src.size() != dst.size()) throw Error(ErrorKind::LengthMismatch, "axpy length mismatch");
  if (c == 0) return;
  if (c == 1) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= f.mul(c, src[i]);
}

void scale(const Field& f, Element c, std::span<Element> v) {
  for (auto& e : v) e = f.mul(c, e);
}

namespace {

// Reduces m in place to reduced row-echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    scale(f, f.inverse(m(r, c)), m.row(r));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) axpy(f, m(i, c), m.row(r), m.row(i));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Field& f, FieldMatrix m) { return rref(f, m).size(); }

FieldMatrix solve_square(const Field& f, FieldMatrix a, FieldMatrix y) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(ErrorKind::LengthMismatch, "solve_square needs a square matrix");
  if (y.rows() != n) throw Error(ErrorKind::LengthMismatch, "right-hand side row count mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      for (std::size_t j = 0; j < y.cols(); ++j) std::swap(y(p, j), y(c, j));
    }
    const Element inv = f.inverse(a(c, c));
    scale(f, inv, a.row(c));
    scale(f, inv, y.row(c));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      if (const Element k = a(i, c); k != 0) {
        axpy(f, k, a.row(c), a.row(i));
        axpy(f, k, y.row(c), y.row(i));
      }
    }
  }
  return y;
}

FieldVector solve_square(const Field& f, FieldMatrix a, std::span<const Element> y) {
  FieldMatrix rhs(y.size(), 1, FieldVector(y.begin(), y.end()));
  return solve_square(f, std::move(a), std::move(rhs)).column(0);
}

std::vector<FieldVector> nullspace_basis(const Field& f, std::span<const FieldVector> rows, std::size_t dim) {
  std::vector<FieldVector> basis;
  if (rows.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      FieldVector e(dim, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  for (const auto& r : rows)
    if (r.size() != dim) throw Error(ErrorKind::LengthMismatch, "nullspace row length differs from dim");
  FieldMatrix m = FieldMatrix::from_rows(rows);
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(dim, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(dim, 0);
    v[free] = 1;
    // Characteristic 2: x_pivot = -m(r, free) = m(r, free).
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldVector constrained_precoder(const Field& f, std::span<const FieldVector> perp_set,
                                 std::span<const FieldVector> nonperp_set, std::size_t dim, Rng& rng,
                                 int max_retries) {
  for (const auto& v : nonperp_set)
    if (v.size() != dim) throw Error(ErrorKind::LengthMismatch, "non-perpendicular vector length differs from dim");
  const auto basis = nullspace_basis(f, perp_set, dim);
  if (basis.empty()) throw Error(ErrorKind::PrecoderNotFound, "perpendicular set spans the whole space");

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    FieldVector u(dim, 0);
    for (const auto& b : basis) axpy(f, random_element(f, rng), b, u);
    bool ok = false;
    for (auto e : u) ok = ok || e != 0;
    for (const auto& w : nonperp_set) ok = ok && dot(f, u, w) != 0;
    if (ok) return u;
  }
  throw Error(ErrorKind::PrecoderNotFound,
              "no vector satisfied the constraints after " + std::to_string(max_retries) + " draws over GF(2^" +
                  std::to_string(f.width()) + ")");
}

}  // namespace mscc::ff
