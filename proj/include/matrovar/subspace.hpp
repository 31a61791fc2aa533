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
#include "matrovar/matrix.hpp"
#include "matrovar/rational.hpp"

namespace matrovar {

/// A linear subspace of Q^ambient, stored with its canonical RREF basis.
/// Two subspaces are equal iff their canonical bases are equal.
class RationalSubspace {
 public:
  explicit RationalSubspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  /// Span of a list of ambient vectors (not necessarily independent).
  static RationalSubspace span(std::size_t ambient_dim,
                               const std::vector<RationalVector>& vectors) {
    RationalSubspace s(ambient_dim);
    if (vectors.empty()) return s;
    for (const auto& v : vectors) {
      if (v.size() != ambient_dim) throw InputError("spanning vector has wrong length");
    }
    RationalMatrix m = RationalMatrix::from_rows(vectors);
    const auto pivots = rref(m);
    for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.push_back(m.row(i));
    return s;
  }

  static RationalSubspace full(std::size_t ambient_dim) {
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      RationalVector e(ambient_dim, Rational(0));
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    return span(ambient_dim, rows);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const RationalVector& v) const {
    if (v.size() != ambient_) throw InputError("membership test: wrong vector length");
    if (is_zero_vector(v)) return true;
    if (basis_.empty()) return false;
    std::vector<RationalVector> rows = basis_;
    rows.push_back(v);
    return rank(RationalMatrix::from_rows(rows)) == basis_.size();
  }

  bool contains(const RationalSubspace& other) const {
    for (const auto& v : other.basis_) {
      if (!contains(v)) return false;
    }
    return true;
  }

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<RationalVector> basis_;  // canonical RREF rows
};

inline RationalSubspace sum(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InputError("subspace sum: ambient dimensions differ");
  }
  std::vector<RationalVector> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return RationalSubspace::span(a.ambient_dim(), rows);
}

/// Exact intersection. Solutions x = A c = B d are recovered from the kernel
/// of [A | -B] built column-wise from the two bases.
inline RationalSubspace intersect(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InputError("subspace intersection: ambient dimensions differ");
  }
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return RationalSubspace(n);
  const std::size_t ka = a.dim(), kb = b.dim();
  RationalMatrix m(n, ka + kb);
  for (std::size_t j = 0; j < ka; ++j) {
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = a.basis()[j][i];
  }
  for (std::size_t j = 0; j < kb; ++j) {
    for (std::size_t i = 0; i < n; ++i) m.at(i, ka + j) = -b.basis()[j][i];
  }
  std::vector<RationalVector> gens;
  for (const auto& k : kernel_basis(m)) {
    RationalVector v(n, Rational(0));
    for (std::size_t j = 0; j < ka; ++j) {
      for (std::size_t i = 0; i < n; ++i) v[i] += k[j] * a.basis()[j][i];
    }
    gens.push_back(std::move(v));
  }
  return RationalSubspace::span(n, gens);
}

inline RationalSubspace intersect_all(const std::vector<RationalSubspace>& spaces) {
  if (spaces.empty()) throw InputError("intersect_all: empty list");
  RationalSubspace acc = spaces[0];
  for (std::size_t i = 1; i < spaces.size(); ++i) acc = intersect(acc, spaces[i]);
  return acc;
}

}  // namespace matrovar
