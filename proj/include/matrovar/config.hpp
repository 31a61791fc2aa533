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

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "matrovar/errors.hpp"
#include "matrovar/matroid.hpp"

namespace matrovar {

/// An equivalence class of small circuits (size <= rank) under equal closure:
/// the matroid's "k-subspace". Its rank is |C|-1 for any member circuit C and
/// its point set is the union of the member circuits (not the closure, which
/// can be larger outside the paving world).
struct SubspaceClass {
  int id = 0;
  Mask points = 0;
  int class_rank = 0;
  Mask representative_circuit = 0;
  Mask closure = 0;  // closure within the domain the class was computed on
};

/// Subspace classes of the submatroid of M on `domain`: circuits of M inside
/// the domain of size <= rank(domain), grouped by closure-within-domain.
/// For paving matroids these are exactly the dependent hyperplanes.
/// A nonnegative `size_cutoff` overrides the circuit-size threshold; hyperplane
/// deletion tracks classes at the original rank even after the domain's rank
/// has dropped.
inline std::vector<SubspaceClass> subspace_classes_in(const Matroid& m, Mask domain,
                                                      int size_cutoff = -1) {
  const int n = size_cutoff >= 0 ? size_cutoff : m.rank_of_mask(domain);
  std::map<Mask, SubspaceClass> by_closure;  // key: closure mask within domain
  for (Mask c : m.circuits_within(domain)) {
    if (mask_size(c) > n) continue;
    const Mask cl = m.closure_mask(c) & domain;
    auto [it, inserted] = by_closure.try_emplace(cl);
    SubspaceClass& sc = it->second;
    if (inserted) {
      sc.representative_circuit = c;
      sc.class_rank = mask_size(c) - 1;
      sc.closure = cl;
    }
    sc.points |= c;
  }
  std::vector<SubspaceClass> out;
  out.reserve(by_closure.size());
  for (auto& [cl, sc] : by_closure) out.push_back(sc);
  std::sort(out.begin(), out.end(), [](const SubspaceClass& a, const SubspaceClass& b) {
    return Matroid::mask_less(a.points, b.points);
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
  return out;
}

inline std::vector<SubspaceClass> subspace_classes(const Matroid& m) {
  return subspace_classes_in(m, m.ground_mask());
}

/// Geometric invariants of a (sub)matroid: classes, incidence lists L_p,
/// degrees, S (degree > 1), P (expected dimension <= 0) and free points.
struct ConfigReport {
  int domain_rank = 0;
  Mask domain = 0;
  std::vector<SubspaceClass> classes;
  std::map<Elem, std::vector<int>> incidence;  // p -> class ids, ascending
  std::map<Elem, int> degrees;
  std::map<Elem, int> expected_dims;  // a_p
  Mask s_points = 0;
  Mask p_points = 0;
  Mask free_points = 0;  // degree 0: the set M(0)

  const std::vector<int>& classes_through(Elem p) const { return incidence.at(p); }
};

/// a_L = sum of class ranks - n(|L|-1) for a set of class ids, with n the
/// rank of the domain the classes were computed on.
inline int expected_dim_of_class_set(const std::vector<SubspaceClass>& classes, int n,
                                     const std::vector<int>& ids) {
  int total = 0;
  for (int id : ids) {
    if (id < 0 || id >= static_cast<int>(classes.size())) {
      throw InputError("unknown subspace class id " + std::to_string(id));
    }
    total += classes[id].class_rank;
  }
  return total - n * (static_cast<int>(ids.size()) - 1);
}

inline ConfigReport config_report_in(const Matroid& m, Mask domain, int size_cutoff = -1) {
  ConfigReport rep;
  rep.domain = domain;
  rep.domain_rank = size_cutoff >= 0 ? size_cutoff : m.rank_of_mask(domain);
  rep.classes = subspace_classes_in(m, domain, rep.domain_rank);
  for (Elem p : set_of(domain)) {
    std::vector<int> through;
    for (const auto& sc : rep.classes) {
      if (mask_subset(Mask{1} << (p - 1), sc.points)) through.push_back(sc.id);
    }
    const int degree = static_cast<int>(through.size());
    const int a_p = expected_dim_of_class_set(rep.classes, rep.domain_rank, through);
    rep.incidence[p] = std::move(through);
    rep.degrees[p] = degree;
    rep.expected_dims[p] = a_p;
    if (degree > 1) rep.s_points |= Mask{1} << (p - 1);
    if (degree == 0) rep.free_points |= Mask{1} << (p - 1);
    // Degree-0 points have a_p = rank by the empty-sum convention and are
    // never in P.
    if (degree > 0 && a_p <= 0) rep.p_points |= Mask{1} << (p - 1);
  }
  return rep;
}

inline ConfigReport config_report(const Matroid& m) {
  return config_report_in(m, m.ground_mask());
}

/// a_p of a single point (full ground set).
inline int expected_dim(const Matroid& m, Elem p) {
  if (p < 1 || p > m.ground_size()) {
    throw InputError("element " + std::to_string(p) + " out of range");
  }
  const ConfigReport rep = config_report(m);
  return rep.expected_dims.at(p);
}

inline int expected_dim_of_set(const Matroid& m, const std::vector<int>& class_ids) {
  return expected_dim_of_class_set(subspace_classes(m), m.rank(), class_ids);
}

}  // namespace matrovar
