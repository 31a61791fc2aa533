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

#include <cstdint>
#include <map>
#include <vector>

#include "matrovar/errors.hpp"
#include "matrovar/matrix.hpp"
#include "matrovar/matroid.hpp"
#include "matrovar/subspace.hpp"

namespace matrovar {

/// Element of the exterior algebra over Q^d, stored by Plücker coordinates on
/// sorted k-subsets of [d] (antisymmetry normalized away). A nonzero
/// decomposable extensor corresponds to the k-dimensional subspace spanned by
/// its factors.
struct Extensor {
  int dim = 0;
  int step = 0;
  std::map<Mask, Rational> coords;  // only nonzero entries

  bool is_zero() const { return coords.empty(); }
};

namespace gca_detail {

/// Sign of the permutation sorting the concatenation (A, B) of two disjoint
/// sorted sets.
inline int shuffle_sign(Mask a, Mask b) {
  int inversions = 0;
  for (Elem x : set_of(a)) {
    // count elements of b smaller than x
    const Mask below = (Mask{1} << (x - 1)) - 1;
    inversions += mask_size(b & below);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

inline void add_coord(Extensor& e, Mask key, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = e.coords.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) e.coords.erase(it);
  }
}

}  // namespace gca_detail

/// Wedge product of vectors: coordinate at S is the determinant of the rows S
/// of the column matrix (v_1 ... v_k). Zero iff the vectors are dependent.
inline Extensor join(const std::vector<RationalVector>& vectors, int d) {
  const int k = static_cast<int>(vectors.size());
  if (k > d) throw InputError("join: more vectors than the ambient dimension");
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != d) throw InputError("join: vector length mismatch");
  }
  Extensor e;
  e.dim = d;
  e.step = k;
  const Mask full = d == 32 ? ~Mask{0} : (Mask{1} << d) - 1;
  for (Mask s : subsets_of_size(full, k)) {
    RationalMatrix m(k, k);
    int r = 0;
    for (Elem row : set_of(s)) {
      for (int c = 0; c < k; ++c) m.at(r, c) = vectors[c][row - 1];
      ++r;
    }
    const Rational det = determinant(m);
    if (det != 0) e.coords[s] = det;
  }
  return e;
}

/// Exterior product on coordinates.
inline Extensor wedge(const Extensor& a, const Extensor& b) {
  if (a.dim != b.dim) throw InputError("wedge: ambient dimensions differ");
  Extensor out;
  out.dim = a.dim;
  out.step = a.step + b.step;
  if (out.step > a.dim) return out;  // forced zero
  for (const auto& [sa, va] : a.coords) {
    for (const auto& [sb, vb] : b.coords) {
      if ((sa & sb) != 0) continue;
      gca_detail::add_coord(out, sa | sb, Rational(gca_detail::shuffle_sign(sa, sb)) * va * vb);
    }
  }
  return out;
}

/// Combinatorial Hodge dual: coordinate at the complement of S picks up the
/// sign of the permutation (S, complement).
inline Extensor hodge_star(const Extensor& a) {
  Extensor out;
  out.dim = a.dim;
  out.step = a.dim - a.step;
  const Mask full = a.dim == 32 ? ~Mask{0} : (Mask{1} << a.dim) - 1;
  for (const auto& [s, v] : a.coords) {
    const Mask comp = full & ~s;
    gca_detail::add_coord(out, comp, Rational(gca_detail::shuffle_sign(s, comp)) * v);
  }
  return out;
}

/// Meet of two extensors with steps k and j: zero when k+j < d, otherwise the
/// signed shuffle sum, computed as the inverse dual of the wedge of duals.
/// The result is nonzero iff the spans sum to the whole space, and then it
/// represents their intersection.
inline Extensor meet(const Extensor& v, const Extensor& w) {
  if (v.dim != w.dim) throw InputError("meet: ambient dimensions differ");
  const int d = v.dim;
  const int m = v.step + w.step - d;
  if (m < 0) {
    Extensor zero;
    zero.dim = d;
    zero.step = 0;
    return zero;
  }
  Extensor out = hodge_star(wedge(hodge_star(v), hodge_star(w)));
  // star(star x) = (-1)^{s(d-s)} x on step s; invert the outer star exactly.
  if ((static_cast<long long>(m) * (d - m)) % 2 != 0) {
    for (auto& [s, val] : out.coords) val = -val;
  }
  return out;
}

/// Subspace spanned by a nonzero decomposable extensor: the solutions x of
/// x wedge e = 0.
inline RationalSubspace extensor_span(const Extensor& e) {
  if (e.is_zero()) return RationalSubspace(e.dim);
  const int d = e.dim;
  // Build the matrix of x -> x ^ e over the basis vectors.
  std::vector<Mask> out_keys;
  {
    const Mask full = d == 32 ? ~Mask{0} : (Mask{1} << d) - 1;
    out_keys = subsets_of_size(full, e.step + 1);
  }
  std::map<Mask, std::size_t> key_index;
  for (std::size_t i = 0; i < out_keys.size(); ++i) key_index[out_keys[i]] = i;
  RationalMatrix m(out_keys.size(), d);
  for (int i = 0; i < d; ++i) {
    const Mask xb = Mask{1} << i;
    for (const auto& [s, v] : e.coords) {
      if ((s & xb) != 0) continue;
      m.at(key_index.at(xb | s), i) += Rational(gca_detail::shuffle_sign(xb, s)) * v;
    }
  }
  return RationalSubspace::span(d, kernel_basis(m));
}

/// Both routes of the expected-dimension test: the iterated meet of extensors
/// is nonzero iff the exact intersection has dimension sum(dims) - n(k-1).
/// The two computations must agree (they are two readings of the same fact);
/// disagreement indicates a defect and throws.
inline bool expected_dimension_holds(const std::vector<RationalSubspace>& subspaces) {
  if (subspaces.empty()) throw InputError("expected_dimension_holds: empty list");
  const std::size_t n = subspaces[0].ambient_dim();
  long long expected = 0;
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != n) throw InputError("expected_dimension_holds: mixed ambients");
    expected += static_cast<long long>(s.dim());
  }
  expected -= static_cast<long long>(n) * (static_cast<long long>(subspaces.size()) - 1);
  if (expected < 0) {
    throw InputError("expected_dimension_holds: expected dimension is negative");
  }

  Extensor acc = join(subspaces[0].basis(), static_cast<int>(n));
  for (std::size_t i = 1; i < subspaces.size(); ++i) {
    acc = meet(acc, join(subspaces[i].basis(), static_cast<int>(n)));
  }
  const bool via_meet = !acc.is_zero();

  const RationalSubspace inter = intersect_all(subspaces);
  const bool via_intersection = static_cast<long long>(inter.dim()) == expected;

  if (via_meet != via_intersection) {
    throw std::logic_error("expected-dimension routes disagree");
  }
  return via_meet;
}

}  // namespace matrovar
