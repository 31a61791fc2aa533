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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matrovar/config.hpp"
#include "matrovar/errors.hpp"
#include "matrovar/matroid.hpp"

namespace matrovar {

enum class ChainKind { kNilpotent, kSolvable };

/// Iterated chain M_0 > M_1 > ... where each step takes S (points of degree
/// > 1) or P (points with a_p <= 0) of the current submatroid. The chain is
/// strictly decreasing until it empties or stabilizes.
struct ChainResult {
  ChainKind kind = ChainKind::kNilpotent;
  std::vector<Mask> chain;  // starts with the full ground set
  bool terminated_empty = false;
  int length = 0;  // first index j with M_j empty, when terminated_empty
  std::optional<Mask> stabilized_at;
};

namespace detail {

inline Mask chain_step(const Matroid& m, Mask domain, ChainKind kind) {
  if (domain == 0) return 0;
  const ConfigReport rep = config_report_in(m, domain);
  return kind == ChainKind::kNilpotent ? rep.s_points : rep.p_points;
}

inline ChainResult run_chain(const Matroid& m, ChainKind kind) {
  ChainResult res;
  res.kind = kind;
  Mask cur = m.ground_mask();
  res.chain.push_back(cur);
  for (int step = 0; step <= m.ground_size() + 1; ++step) {
    if (cur == 0) {
      res.terminated_empty = true;
      res.length = static_cast<int>(res.chain.size()) - 1;
      return res;
    }
    const Mask next = chain_step(m, cur, kind);
    if (next == cur) {
      res.stabilized_at = cur;
      res.length = static_cast<int>(res.chain.size()) - 1;
      return res;
    }
    res.chain.push_back(next);
    cur = next;
  }
  throw std::logic_error("chain did not terminate within the ground-size bound");
}

}  // namespace detail

inline ChainResult nilpotent_chain(const Matroid& m) {
  return detail::run_chain(m, ChainKind::kNilpotent);
}

inline ChainResult solvable_chain(const Matroid& m) {
  return detail::run_chain(m, ChainKind::kSolvable);
}

inline bool is_nilpotent(const Matroid& m) { return nilpotent_chain(m).terminated_empty; }
inline bool is_solvable(const Matroid& m) { return solvable_chain(m).terminated_empty; }

/// A matroid is weak-nilpotent when its nilpotent chain contains a submatroid
/// of rank below rank(M). For paving matroids this coincides with nilpotency.
inline bool is_weak_nilpotent(const Matroid& m) {
  const ChainResult chain = nilpotent_chain(m);
  for (std::size_t j = 1; j < chain.chain.size(); ++j) {
    if (m.rank_of_mask(chain.chain[j]) < m.rank()) return true;
  }
  return chain.terminated_empty;
}

// ---------------------------------------------------------------------------
// Forest test (rank-3 point-line configurations)
// ---------------------------------------------------------------------------

/// A point/line cycle witness: points[i] and points[i+1] lie on lines[i], and
/// the walk closes up (points.front() == points.back()).
struct CycleWitness {
  ElemSet points;               // x_1, ..., x_k with x_1 == x_k
  std::vector<Mask> lines;      // l_1, ..., l_{k-1} as point sets
};

struct ForestResult {
  bool forest = false;
  std::optional<CycleWitness> cycle;
};

/// Cycle search in the point-line incidence graph. For a simple rank-3
/// configuration two distinct lines share at most one point, which makes the
/// incidence-graph acyclicity equivalent to the forest condition.
inline ForestResult is_forest(const Matroid& m) {
  if (m.rank() != 3 || !m.is_simple()) {
    throw InputError("forest test requires a simple rank-3 configuration");
  }
  const std::vector<SubspaceClass> lines = subspace_classes(m);
  ForestResult res;
  res.forest = true;

  // DFS over the bipartite incidence graph; vertices are points (even ids)
  // and lines (odd ids encoded as ground_size + line index + 1).
  const int np = m.ground_size();
  const int nl = static_cast<int>(lines.size());
  auto neighbors = [&](int v) {
    std::vector<int> out;
    if (v < np) {
      for (int li = 0; li < nl; ++li) {
        if (mask_subset(Mask{1} << v, lines[li].points)) out.push_back(np + li);
      }
    } else {
      for (Elem p : set_of(lines[v - np].points)) out.push_back(p - 1);
    }
    return out;
  };
  std::vector<int> parent(np + nl, -2);  // -2 unvisited, -1 root
  for (int start = 0; start < np + nl; ++start) {
    if (parent[start] != -2) continue;
    std::vector<std::pair<int, int>> stack{{start, -1}};
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      if (parent[v] != -2) continue;
      parent[v] = from;
      for (int w : neighbors(v)) {
        if (w == from) continue;
        if (parent[w] != -2) {
          // Found a cycle: walk both v and w back to their common ancestor.
          std::vector<int> pv{v}, pw{w};
          for (int x = v; x != -1; x = parent[x]) {
            if (x != v) pv.push_back(x);
          }
          for (int x = w; x != -1; x = parent[x]) {
            if (x != w) pw.push_back(x);
          }
          std::set<int> on_pv(pv.begin(), pv.end());
          int meet = -1;
          for (int x : pw) {
            if (on_pv.count(x)) {
              meet = x;
              break;
            }
          }
          std::vector<int> cycle;
          for (int x : pv) {
            cycle.push_back(x);
            if (x == meet) break;
          }
          std::vector<int> tail;
          for (int x : pw) {
            if (x == meet) break;
            tail.push_back(x);
          }
          std::reverse(tail.begin(), tail.end());
          cycle.insert(cycle.end(), tail.begin(), tail.end());
          cycle.push_back(cycle.front());
          CycleWitness wit;
          // The cycle alternates point/line; rotate so it starts at a point.
          if (cycle.front() >= np) {
            cycle.pop_back();
            std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
            cycle.push_back(cycle.front());
          }
          for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i % 2 == 0) {
              wit.points.push_back(cycle[i] + 1);
            } else {
              wit.lines.push_back(lines[cycle[i] - np].points);
            }
          }
          res.forest = false;
          res.cycle = std::move(wit);
          return res;
        }
        stack.emplace_back(w, v);
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Special matroids
// ---------------------------------------------------------------------------

struct SpecialViolation {
  int level = 0;
  Elem point = 0;
  std::vector<Mask> class_points;  // the family L as point sets
  int a_L = 0;
  int intersection_rank = 0;
};

struct SpecialResult {
  bool special = false;
  std::optional<SpecialViolation> violation;
};

/// A solvable matroid is special when for every chain level j, every point
/// q in M^j \ M^{j+1} and every family L of classes of M^j through q,
/// rank(intersection of the class point sets) <= a_L, with a_L computed from
/// rank(M^j). Returns the first violation found.
inline SpecialResult is_special(const Matroid& m) {
  const ChainResult chain = solvable_chain(m);
  if (!chain.terminated_empty) {
    throw PreconditionError("solvable", "is_special requires a solvable matroid");
  }
  for (std::size_t j = 0; j + 1 < chain.chain.size(); ++j) {
    const Mask domain = chain.chain[j];
    const Mask next = chain.chain[j + 1];
    const ConfigReport rep = config_report_in(m, domain);
    for (Elem q : set_of(domain & ~next)) {
      const std::vector<int>& lq = rep.classes_through(q);
      const int deg = static_cast<int>(lq.size());
      for (Mask sub = 1; sub < (Mask{1} << deg); ++sub) {
        std::vector<int> ids;
        Mask inter = ~Mask{0};
        for (int i = 0; i < deg; ++i) {
          if (sub & (Mask{1} << i)) {
            ids.push_back(lq[i]);
            inter &= rep.classes[lq[i]].points;
          }
        }
        const int a_l = expected_dim_of_class_set(rep.classes, rep.domain_rank, ids);
        const int r = m.rank_of_mask(inter);
        if (r > a_l) {
          SpecialViolation v;
          v.level = static_cast<int>(j);
          v.point = q;
          for (int id : ids) v.class_points.push_back(rep.classes[id].points);
          v.a_L = a_l;
          v.intersection_rank = r;
          return SpecialResult{false, v};
        }
      }
    }
  }
  return SpecialResult{true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Deletion sequences for paving matroids
// ---------------------------------------------------------------------------

namespace detail {

inline void require_paving(const Matroid& m, const char* what) {
  if (!m.is_paving()) {
    throw InputError(std::string(what) + " requires a paving matroid");
  }
}

}  // namespace detail

/// Greedy hyperplane deletion. In nilpotent mode each deleted hyperplane must
/// satisfy |l intersect S| <= n-1 and deletion keeps (P \ l) union S_l; in
/// solvable mode the same with P in place of S. Greedy choice is complete for
/// chain emptiness, so a returned nullopt means the chain does not empty.
inline std::optional<std::vector<Mask>> deletion_sequence(const Matroid& m, ChainKind mode) {
  detail::require_paving(m, "deletion_sequence");
  const int n = m.rank();
  std::vector<Mask> seq;
  Mask domain = m.ground_mask();
  while (true) {
    if (domain == 0) return seq;
    // Hyperplanes are tracked at the original rank so that deletion continues
    // through rank-deficient tails (at most one hyperplane can survive there).
    const ConfigReport rep = config_report_in(m, domain, n);
    if (rep.classes.empty()) return seq;
    const Mask marked = mode == ChainKind::kNilpotent ? rep.s_points : rep.p_points;
    bool advanced = false;
    for (const auto& hp : rep.classes) {  // canonical order: lowest point set first
      const Mask kept = hp.points & marked;
      if (mask_size(kept) <= n - 1) {
        seq.push_back(hp.points);
        domain = (domain & ~hp.points) | kept;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
}

struct StrongNilpotentResult {
  bool strong_nilpotent = false;
  std::vector<Mask> sequence;
};

namespace detail {

/// Hypothesis check for one hyperplane within the current submatroid: for
/// every 0 <= k <= n-2 it contains at most k points of degree >= n-k.
inline bool strong_condition_holds(const ConfigReport& rep, const SubspaceClass& hp, int n) {
  for (int k = 0; k <= n - 2; ++k) {
    int count = 0;
    for (Elem p : set_of(hp.points)) {
      if (rep.degrees.at(p) >= n - k) ++count;
    }
    if (count > k) return false;
  }
  return true;
}

inline bool strong_search(const Matroid& m, Mask domain, int n, std::set<Mask>& dead,
                          std::vector<Mask>& seq) {
  if (domain == 0) return true;
  const ConfigReport rep = config_report_in(m, domain, n);
  if (rep.classes.empty()) return true;
  if (dead.count(domain)) return false;
  for (const auto& hp : rep.classes) {
    if (!strong_condition_holds(rep, hp, n)) continue;
    const Mask kept = hp.points & rep.s_points;
    const Mask next = (domain & ~hp.points) | kept;
    seq.push_back(hp.points);
    if (strong_search(m, next, n, dead, seq)) return true;
    seq.pop_back();
  }
  dead.insert(domain);
  return false;
}

}  // namespace detail

/// Backtracking search for a deletion sequence in which every hyperplane
/// satisfies the degree condition above inside the current submatroid and the
/// final submatroid has no dependent hyperplanes.
inline StrongNilpotentResult is_strong_nilpotent(const Matroid& m) {
  detail::require_paving(m, "is_strong_nilpotent");
  StrongNilpotentResult res;
  std::set<Mask> dead;
  res.strong_nilpotent = detail::strong_search(m, m.ground_mask(), m.rank(), dead, res.sequence);
  if (!res.strong_nilpotent) res.sequence.clear();
  return res;
}

// ---------------------------------------------------------------------------
// Lifting-dimension invariant
// ---------------------------------------------------------------------------

/// Certificate for the constant kernel dimension of the evaluated liftability
/// matrix of a weak-nilpotent matroid: walking the nilpotent chain to the
/// first member of lower rank, dim = sum of the per-level constants plus the
/// terminal rank.
struct DimCertificate {
  std::vector<Mask> chain_prefix;  // M_0, ..., M_{k-1} (all of full rank)
  std::vector<int> constants;      // c_1, ..., c_k
  int terminal_rank = 0;           // rank of M_k
  int dim_value = 0;               // sum of constants + terminal rank
};

inline DimCertificate lifting_dimension_invariant(const Matroid& m) {
  const ChainResult chain = nilpotent_chain(m);
  int k = -1;
  for (std::size_t j = 1; j < chain.chain.size(); ++j) {
    if (m.rank_of_mask(chain.chain[j]) < m.rank()) {
      k = static_cast<int>(j);
      break;
    }
  }
  if (k < 0) {
    throw PreconditionError("weak-nilpotent",
                            "lifting_dimension_invariant requires a weak-nilpotent matroid");
  }
  DimCertificate cert;
  for (int j = 1; j <= k; ++j) {
    const Mask level = chain.chain[j - 1];
    cert.chain_prefix.push_back(level);
    const ConfigReport rep = config_report_in(m, level);
    int c = mask_size(rep.free_points);
    for (const auto& sc : rep.classes) {
      const Mask s_l = sc.points & rep.s_points;
      c += sc.class_rank - m.rank_of_mask(s_l);
    }
    cert.constants.push_back(c);
  }
  cert.terminal_rank = m.rank_of_mask(chain.chain[k]);
  cert.dim_value = cert.terminal_rank;
  for (int c : cert.constants) cert.dim_value += c;
  return cert;
}

}  // namespace matrovar
