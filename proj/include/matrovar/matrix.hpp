// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "matrovar/errors.hpp"
#include "matrovar/rational.hpp"

namespace matrovar {

/// Dense row-major matrix over the rationals. All operations are exact;
/// elimination pivots on the lowest-index row with a nonzero entry so every
/// result is deterministic.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw InputError("ragged row lengths");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static RationalMatrix from_columns(const std::vector<RationalVector>& cols) {
    const std::size_t c = cols.size();
    const std::size_t r = c == 0 ? 0 : cols[0].size();
    RationalMatrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
      if (cols[j].size() != r) throw InputError("ragged column lengths");
      for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const {
    RationalVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
  }

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Reduces in place to reduced row echelon form. Returns the pivot columns in
/// increasing order.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
    }
    const Rational inv = Rational(1) / m.at(lead, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

inline std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return rref(work).size();
}

/// Basis of the right kernel: cols(m) - rank(m) vectors v with m * v = 0,
/// one per free column, in increasing free-column order.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RationalMatrix work = m;
  const std::vector<std::size_t> pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -work.at(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  if (v.size() != m.cols()) throw InputError("matrix-vector size mismatch");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  }
  return out;
}

inline Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  RationalMatrix w = m;
  const std::size_t n = w.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w.at(piv, col) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
      det = -det;
    }
    det *= w.at(col, col);
    const Rational inv = Rational(1) / w.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (w.at(r, col) == 0) continue;
      const Rational f = w.at(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) w.at(r, j) -= f * w.at(col, j);
    }
  }
  return det;
}

}  // namespace matrovar
