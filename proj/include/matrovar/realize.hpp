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
#include <string>
#include <utility>
#include <vector>

#include "matrovar/chains.hpp"
#include "matrovar/config.hpp"
#include "matrovar/errors.hpp"
#include "matrovar/matrix.hpp"
#include "matrovar/matroid.hpp"
#include "matrovar/rational.hpp"
#include "matrovar/sampling.hpp"
#include "matrovar/subspace.hpp"

namespace matrovar {

using VectorAssignment = std::map<Elem, RationalVector>;

/// A realization: exact rational vectors in dimension rank(M), one per ground
/// element, reproducing the matroid's dependencies exactly when verified.
struct Realization {
  Matroid matroid;
  int dim = 0;
  VectorAssignment vectors;
  bool verified = false;
};

namespace realize_detail {

inline void check_coverage(const Matroid& m, const VectorAssignment& vectors,
                           std::size_t* ambient_out) {
  std::size_t ambient = 0;
  for (Elem e = 1; e <= m.ground_size(); ++e) {
    const auto it = vectors.find(e);
    if (it == vectors.end()) {
      throw InputError("no vector assigned to element " + std::to_string(e));
    }
    if (ambient == 0) {
      ambient = it->second.size();
      if (ambient == 0) throw InputError("vectors must have length at least 1");
    } else if (it->second.size() != ambient) {
      throw InputError("vectors have inconsistent lengths");
    }
  }
  if (ambient_out != nullptr) *ambient_out = ambient;
}

inline RationalSubspace span_of_elems(const VectorAssignment& vectors, Mask elems,
                                      std::size_t ambient) {
  std::vector<RationalVector> vs;
  for (Elem e : set_of(elems)) vs.push_back(vectors.at(e));
  return RationalSubspace::span(ambient, vs);
}

inline int rank_of_elems(const VectorAssignment& vectors, Mask elems) {
  std::vector<RationalVector> cols;
  for (Elem e : set_of(elems)) cols.push_back(vectors.at(e));
  if (cols.empty()) return 0;
  return static_cast<int>(rank(RationalMatrix::from_columns(cols)));
}

}  // namespace realize_detail

struct CircuitVarietyResult {
  bool member = false;
  std::optional<Mask> independent_circuit;  // witness when not a member
};

/// Membership in the circuit variety: every circuit of M is dependent in the
/// collection (any common ambient dimension).
inline CircuitVarietyResult in_circuit_variety(const Matroid& m, const VectorAssignment& vectors) {
  realize_detail::check_coverage(m, vectors, nullptr);
  for (Mask c : m.circuits()) {
    if (realize_detail::rank_of_elems(vectors, c) == mask_size(c)) {
      return CircuitVarietyResult{false, c};
    }
  }
  return CircuitVarietyResult{true, std::nullopt};
}

struct RealizationCheck {
  bool realizes = false;
  std::optional<Mask> discrepancy;  // a circuit of exactly one of the two matroids
  std::string reason;
};

/// Exact realization test: the matroid of the vectors equals M. The
/// discrepancy reports a circuit present on one side only.
inline RealizationCheck is_realization(const Matroid& m, const Realization& r) {
  if (r.dim != m.rank()) {
    throw InputError("realization dimension " + std::to_string(r.dim) +
                     " differs from matroid rank " + std::to_string(m.rank()));
  }
  realize_detail::check_coverage(m, r.vectors, nullptr);
  for (const auto& [e, v] : r.vectors) {
    if (is_zero_vector(v)) {
      return RealizationCheck{false, std::nullopt,
                              "zero vector (loop) at element " + std::to_string(e)};
    }
  }
  MatroidOptions opts;
  opts.max_ground = std::max(kDefaultMaxGround, m.ground_size());
  const Matroid derived = matroid_of_vectors(r.dim, r.vectors, "", opts);
  if (derived == m) return RealizationCheck{true, std::nullopt, ""};
  for (Mask c : derived.circuits()) {
    const auto& mc = m.circuits();
    if (std::find(mc.begin(), mc.end(), c) == mc.end()) {
      return RealizationCheck{false, c,
                              "vectors have a dependency the matroid lacks: " +
                                  Matroid::set_to_string(c)};
    }
  }
  for (Mask c : m.circuits()) {
    const auto& dc = derived.circuits();
    if (std::find(dc.begin(), dc.end(), c) == dc.end()) {
      return RealizationCheck{false, c,
                              "matroid circuit not dependent in the vectors: " +
                                  Matroid::set_to_string(c)};
    }
  }
  return RealizationCheck{false, std::nullopt, "rank mismatch"};
}

// ---------------------------------------------------------------------------
// Liftability matrix
// ---------------------------------------------------------------------------

/// One symbolic entry: sign * [points..., q]_K, the minor on rows K of the
/// listed point vectors followed by the lifting point q.
struct SignedBracketToken {
  int sign = 1;
  ElemSet points;        // the circuit with one element removed, in order
  bool includes_q = true;
  Mask row_subset = 0;   // K, a subset of [n]
};

/// Symbolic liftability matrix: one row per (circuit of size k <= n, K in
/// C([n], k)); the column of circuit element c_i holds
/// (-1)^(i-1) [c_1,...,^c_i,...,c_k, q]_K and other columns are zero.
struct LiftabilityMatrix {
  struct RowLabel {
    Mask circuit = 0;
    Mask k_subset = 0;
  };
  int ground_size = 0;
  int rank = 0;
  std::vector<RowLabel> rows;
  std::map<std::pair<std::size_t, Elem>, SignedBracketToken> entries;
};

inline LiftabilityMatrix liftability_matrix(const Matroid& m) {
  LiftabilityMatrix lm;
  lm.ground_size = m.ground_size();
  lm.rank = m.rank();
  const Mask rows_universe = (m.rank() == 32) ? ~Mask{0} : (Mask{1} << m.rank()) - 1;
  for (Mask c : m.circuits()) {
    const int k = mask_size(c);
    if (k > m.rank()) continue;
    for (Mask kset : subsets_of_size(rows_universe, k)) {
      const std::size_t row = lm.rows.size();
      lm.rows.push_back(LiftabilityMatrix::RowLabel{c, kset});
      const ElemSet elems = set_of(c);
      for (int i = 0; i < k; ++i) {
        SignedBracketToken tok;
        tok.sign = (i % 2 == 0) ? 1 : -1;
        for (int j = 0; j < k; ++j) {
          if (j != i) tok.points.push_back(elems[j]);
        }
        tok.includes_q = true;
        tok.row_subset = kset;
        lm.entries[{row, elems[i]}] = std::move(tok);
      }
    }
  }
  return lm;
}

/// Evaluated liftability matrix for a collection in any ambient dimension:
/// rows range over (circuit of size k <= ambient, K in C([ambient], k)). At
/// ambient = rank(M) this is exactly the evaluation of the symbolic matrix
/// (circuits of size rank+1 have no K rows there, being dependent for free);
/// in larger ambients those circuits do constrain the liftings and get rows.
inline RationalMatrix evaluate_liftability(const Matroid& m, const VectorAssignment& vectors,
                                           const RationalVector& q) {
  std::size_t ambient = 0;
  realize_detail::check_coverage(m, vectors, &ambient);
  if (q.size() != ambient) throw InputError("lifting point has wrong length");
  const Mask rows_universe =
      (ambient >= 32) ? ~Mask{0} : (Mask{1} << static_cast<int>(ambient)) - 1;
  std::vector<std::pair<Mask, Mask>> row_labels;
  for (Mask c : m.circuits()) {
    const int k = mask_size(c);
    if (k > static_cast<int>(ambient)) continue;
    for (Mask kset : subsets_of_size(rows_universe, k)) row_labels.emplace_back(c, kset);
  }
  RationalMatrix out(row_labels.size(), m.ground_size());
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    const auto [c, kset] = row_labels[r];
    const ElemSet elems = set_of(c);
    const ElemSet krows = set_of(kset);
    const int k = static_cast<int>(elems.size());
    for (int i = 0; i < k; ++i) {
      RationalMatrix minor(k, k);
      int col = 0;
      for (int j = 0; j < k; ++j) {
        if (j == i) continue;
        for (int rr = 0; rr < k; ++rr) minor.at(rr, col) = vectors.at(elems[j])[krows[rr] - 1];
        ++col;
      }
      for (int rr = 0; rr < k; ++rr) minor.at(rr, k - 1) = q[krows[rr] - 1];
      Rational v = determinant(minor);
      if (i % 2 == 1) v = -v;
      out.at(r, elems[i] - 1) = v;
    }
  }
  return out;
}

/// Kernel dimension of the evaluated liftability matrix: the dimension of the
/// liftings of the collection from q that stay inside the circuit variety.
inline int lifting_dimension_at(const Matroid& m, const VectorAssignment& vectors,
                                const RationalVector& q) {
  const CircuitVarietyResult cv = in_circuit_variety(m, vectors);
  if (!cv.member) {
    throw PreconditionError("circuit-variety membership",
                            "collection is not in the circuit variety; circuit " +
                                Matroid::set_to_string(*cv.independent_circuit) +
                                " is independent");
  }
  const RationalMatrix eval = evaluate_liftability(m, vectors, q);
  return m.ground_size() - static_cast<int>(rank(eval));
}

/// A point avoiding every class span of the realization at every chain level
/// and the span of the terminal chain member; the liftability kernel has the
/// invariant dimension exactly for such points.
inline RationalVector sample_outside_point(const Matroid& m, const VectorAssignment& vectors,
                                           Rng& rng, std::int64_t bound = kDefaultBound,
                                           int retries = kDefaultRetries) {
  std::size_t ambient = 0;
  realize_detail::check_coverage(m, vectors, &ambient);
  std::vector<RationalSubspace> forbidden;
  const ChainResult chain = nilpotent_chain(m);
  for (std::size_t j = 0; j < chain.chain.size(); ++j) {
    const Mask level = chain.chain[j];
    if (level == 0) continue;
    for (const auto& sc : subspace_classes_in(m, level)) {
      RationalSubspace s = realize_detail::span_of_elems(vectors, sc.points, ambient);
      if (s.dim() < ambient) forbidden.push_back(std::move(s));
    }
    // Spans of the restricted collections themselves: the terminal step of
    // the dimension recursion needs q outside them.
    if (j > 0) {
      RationalSubspace s = realize_detail::span_of_elems(vectors, level, ambient);
      if (s.dim() < ambient) forbidden.push_back(std::move(s));
    }
  }
  return random_vector_avoiding(ambient, forbidden, rng, bound, retries);
}

// ---------------------------------------------------------------------------
// Stability
// ---------------------------------------------------------------------------

struct StableReport {
  struct PointCheck {
    int level = 0;
    int expected = 0;  // a_p at that level
    int actual = 0;    // dim of the intersection of class spans
    bool ok = false;
  };
  std::map<Elem, PointCheck> per_point;      // innermost failing level wins
  std::vector<bool> quasi_stable_levels;     // one per nonempty chain level
  bool stable = false;
};

/// Stability of a verified realization of a solvable matroid: at every chain
/// level j and every point p outside P of that level with at least one class
/// through it, the intersection of the class spans has dimension a_p.
inline StableReport stable_check(const Matroid& m, const Realization& r) {
  const ChainResult chain = solvable_chain(m);
  if (!chain.terminated_empty) {
    throw PreconditionError("solvable", "stable_check requires a solvable matroid");
  }
  const RealizationCheck rc = is_realization(m, r);
  if (!rc.realizes) {
    throw PreconditionError("verified realization",
                            "stable_check requires a verified realization: " + rc.reason);
  }
  const std::size_t ambient = static_cast<std::size_t>(r.dim);
  StableReport rep;
  rep.stable = true;
  for (std::size_t j = 0; j + 1 < chain.chain.size(); ++j) {
    const Mask domain = chain.chain[j];
    const ConfigReport cfg = config_report_in(m, domain);
    bool level_ok = true;
    for (Elem p : set_of(domain)) {
      if (mask_subset(Mask{1} << (p - 1), cfg.p_points)) continue;
      const auto& lp = cfg.classes_through(p);
      if (lp.empty()) continue;  // degree-0 points pass vacuously
      std::vector<RationalSubspace> spans;
      for (int id : lp) {
        spans.push_back(realize_detail::span_of_elems(r.vectors, cfg.classes[id].points, ambient));
      }
      const int actual = static_cast<int>(intersect_all(spans).dim());
      const int expected = cfg.expected_dims.at(p);
      const bool ok = actual == expected;
      if (!ok) level_ok = false;
      auto it = rep.per_point.find(p);
      if (it == rep.per_point.end() || (it->second.ok && !ok)) {
        rep.per_point[p] =
            StableReport::PointCheck{static_cast<int>(j), expected, actual, ok};
      }
    }
    rep.quasi_stable_levels.push_back(level_ok);
    if (!level_ok) rep.stable = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Nilpotent realizer
// ---------------------------------------------------------------------------

namespace realize_detail {

/// Spans of all independent subsets of the placed elements of size <= dim-1
/// whose closure misses p: with these avoided, adding the new vector creates
/// no dependency the matroid does not require.
inline std::vector<RationalSubspace> forbidden_spans_for(const Matroid& m,
                                                         const VectorAssignment& placed,
                                                         Mask placed_mask, Elem p,
                                                         std::size_t dim) {
  std::vector<RationalSubspace> out;
  std::vector<std::vector<RationalVector>> seen_bases;
  const Mask pbit = Mask{1} << (p - 1);
  for (int size = static_cast<int>(dim) - 1; size >= 1; --size) {
    for (Mask b : subsets_of_size(placed_mask, size)) {
      if (!m.independent(b)) continue;
      if (mask_subset(pbit, m.closure_mask(b))) continue;
      RationalSubspace s = span_of_elems(placed, b, dim);
      bool dup = false;
      for (const auto& prev : out) {
        if (prev == s) {
          dup = true;
          break;
        }
      }
      if (!dup) out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace realize_detail

/// Constructive realizer for nilpotent matroids: peel points of degree <= 1
/// (lowest index first), then re-add them in reverse. Rank-raising points get
/// a fresh coordinate direction; degree-1 points are sampled inside the span
/// of their class; degree-0 rank-preserving points are sampled in the ambient
/// space. Every sample avoids all spans that would create an extra
/// dependency, and the result is verified exactly.
inline Realization realize_nilpotent(const Matroid& m, Rng& rng,
                                     std::int64_t bound = kDefaultBound,
                                     int retries = kDefaultRetries) {
  if (!is_nilpotent(m)) {
    throw PreconditionError("nilpotent", "realize_nilpotent requires a nilpotent matroid");
  }
  // Peel order: repeatedly remove the lowest-index point of degree <= 1.
  std::vector<Elem> peel;
  Mask cur = m.ground_mask();
  while (cur != 0) {
    const ConfigReport rep = config_report_in(m, cur);
    Elem chosen = 0;
    for (Elem p : set_of(cur)) {
      if (rep.degrees.at(p) <= 1) {
        chosen = p;
        break;
      }
    }
    if (chosen == 0) {
      throw PreconditionError("nilpotent", "peeling stalled; matroid is not nilpotent");
    }
    peel.push_back(chosen);
    cur &= ~(Mask{1} << (chosen - 1));
  }

  GenericityError last_failure("unused");
  for (int attempt = 0; attempt < retries; ++attempt) {
    try {
      VectorAssignment placed;
      Mask placed_mask = 0;
      std::size_t dim = 0;
      for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        const Elem p = *it;
        const Mask pbit = Mask{1} << (p - 1);
        const int old_rank = m.rank_of_mask(placed_mask);
        const int new_rank = m.rank_of_mask(placed_mask | pbit);
        if (new_rank > old_rank) {
          // Fresh coordinate direction for a rank-raising point.
          ++dim;
          for (auto& [e, v] : placed) v.push_back(Rational(0));
          RationalVector v(dim, Rational(0));
          v[dim - 1] = 1;
          placed[p] = std::move(v);
          placed_mask |= pbit;
          continue;
        }
        const std::vector<RationalSubspace> forbidden =
            realize_detail::forbidden_spans_for(m, placed, placed_mask, p, dim);
        // Class of p within the rebuilt submatroid, if any.
        const ConfigReport rep = config_report_in(m, placed_mask | pbit);
        const auto& lp = rep.classes_through(p);
        RationalVector v;
        if (lp.empty()) {
          v = random_vector_avoiding(dim, forbidden, rng, bound, retries);
        } else {
          const Mask member = rep.classes[lp.front()].representative_circuit & ~pbit;
          const RationalSubspace cls = realize_detail::span_of_elems(placed, member, dim);
          v = random_point_in_subspace_avoiding(cls, forbidden, rng, bound, retries);
        }
        placed[p] = std::move(v);
        placed_mask |= pbit;
      }
      Realization r{m, static_cast<int>(dim), std::move(placed), false};
      const RealizationCheck check = is_realization(m, r);
      if (!check.realizes) {
        throw GenericityError("sampled realization failed verification: " + check.reason);
      }
      r.verified = true;
      return r;
    } catch (const GenericityError& e) {
      last_failure = e;
    }
  }
  throw GenericityError(std::string("realize_nilpotent: retries exhausted; last failure: ") +
                        last_failure.what());
}

// ---------------------------------------------------------------------------
// Stable realizer for special solvable matroids with empty P
// ---------------------------------------------------------------------------

/// Realizer for special solvable matroids with P empty: sample a subspace
/// H_l of dimension rank(l) per class, reject unless every point's class
/// intersection has its expected dimension, then place points generically in
/// their intersections. Output is verified exactly and stable.
inline std::pair<Realization, StableReport> realize_stable_special(
    const Matroid& m, Rng& rng, std::int64_t bound = kDefaultBound,
    int retries = kDefaultRetries) {
  if (!is_solvable(m)) {
    throw PreconditionError("solvable", "realize_stable_special requires a solvable matroid");
  }
  const SpecialResult special = is_special(m);
  if (!special.special) {
    std::string what = "realize_stable_special requires a special matroid; violation at point " +
                       std::to_string(special.violation->point) + ": classes";
    for (Mask l : special.violation->class_points) what += " " + Matroid::set_to_string(l);
    what += " have intersection rank " + std::to_string(special.violation->intersection_rank) +
            " > expected " + std::to_string(special.violation->a_L);
    throw PreconditionError("special", what);
  }
  const ConfigReport cfg = config_report(m);
  if (cfg.p_points != 0) {
    throw PreconditionError("empty P",
                            "realize_stable_special requires no points of nonpositive expected "
                            "dimension; P = " +
                                Matroid::set_to_string(cfg.p_points));
  }
  const std::size_t n = static_cast<std::size_t>(m.rank());

  GenericityError last_failure("unused");
  for (int attempt = 0; attempt < retries; ++attempt) {
    try {
      std::vector<RationalSubspace> class_spaces;
      for (const auto& sc : cfg.classes) {
        class_spaces.push_back(random_subspace(n, sc.class_rank, rng, bound, retries));
      }
      // Reject unless every point's intersection has the expected dimension.
      bool ok = true;
      std::map<Elem, RationalSubspace> targets;
      for (Elem p = 1; p <= m.ground_size(); ++p) {
        const auto& lp = cfg.classes_through(p);
        if (lp.empty()) continue;
        std::vector<RationalSubspace> through;
        for (int id : lp) through.push_back(class_spaces[id]);
        RationalSubspace inter = intersect_all(through);
        if (static_cast<int>(inter.dim()) != cfg.expected_dims.at(p)) {
          ok = false;
          break;
        }
        targets.emplace(p, std::move(inter));
      }
      if (!ok) {
        throw GenericityError("sampled class subspaces missed an expected dimension");
      }
      VectorAssignment vectors;
      for (Elem p = 1; p <= m.ground_size(); ++p) {
        const auto& lp = cfg.classes_through(p);
        std::vector<RationalSubspace> forbidden;
        for (std::size_t id = 0; id < class_spaces.size(); ++id) {
          if (std::find(lp.begin(), lp.end(), static_cast<int>(id)) != lp.end()) continue;
          forbidden.push_back(class_spaces[id]);
        }
        if (lp.empty()) {
          vectors[p] = random_vector_avoiding(n, forbidden, rng, bound, retries);
        } else {
          // Avoidance is only possible for proper intersections; clip the
          // forbidden list to subspaces not containing the target.
          const RationalSubspace& target = targets.at(p);
          std::vector<RationalSubspace> usable;
          for (auto& f : forbidden) {
            if (!f.contains(target)) usable.push_back(std::move(f));
          }
          vectors[p] = random_point_in_subspace_avoiding(target, usable, rng, bound, retries);
        }
      }
      Realization r{m, static_cast<int>(n), std::move(vectors), false};
      const RealizationCheck check = is_realization(m, r);
      if (!check.realizes) {
        throw GenericityError("sampled stable candidate failed realization: " + check.reason);
      }
      r.verified = true;
      StableReport stab = stable_check(m, r);
      if (!stab.stable) {
        throw GenericityError("sampled realization is not stable");
      }
      return {std::move(r), std::move(stab)};
    } catch (const GenericityError& e) {
      last_failure = e;
    }
  }
  throw GenericityError(std::string("realize_stable_special: retries exhausted; last failure: ") +
                        last_failure.what());
}

// ---------------------------------------------------------------------------
// Minor / rank certificates
// ---------------------------------------------------------------------------

enum class BoundKind { kWeakNilpotentDim, kRankProjection };

/// Rank certificate for the evaluated liftability matrix. The weak-nilpotent
/// bound is |M| - dim(M); the projection bound is |M| - rank(M). All minors
/// one size above the bound must vanish; a random sample of them is checked
/// explicitly when the matrix is large enough to have any.
struct MinorCertificate {
  BoundKind kind = BoundKind::kRankProjection;
  int matrix_rank = 0;
  int bound = 0;           // certified upper bound for the rank
  int minor_size = 0;      // bound + 1
  std::size_t rows = 0;
  std::size_t cols = 0;
  int minors_sampled = 0;  // 0 when no minor of that size exists
  bool sampled_minors_all_zero = true;
  bool pass = false;       // matrix_rank <= bound and sampled minors vanish
};

inline MinorCertificate minor_rank_certificate(const Matroid& m, const Realization& r,
                                               const RationalVector& q, BoundKind kind, Rng& rng,
                                               int minor_samples = 100) {
  const RealizationCheck check = is_realization(m, r);
  if (!check.realizes) {
    throw PreconditionError("verified realization",
                            "certificate requires a verified realization: " + check.reason);
  }
  MinorCertificate cert;
  cert.kind = kind;
  if (kind == BoundKind::kWeakNilpotentDim) {
    const DimCertificate dim = lifting_dimension_invariant(m);  // checks weak-nilpotency
    cert.bound = m.ground_size() - dim.dim_value;
  } else {
    cert.bound = m.ground_size() - m.rank();
  }
  cert.minor_size = cert.bound + 1;
  const RationalMatrix eval = evaluate_liftability(m, r.vectors, q);
  cert.rows = eval.rows();
  cert.cols = eval.cols();
  cert.matrix_rank = static_cast<int>(rank(eval));
  const std::size_t t = static_cast<std::size_t>(cert.minor_size);
  if (t >= 1 && t <= eval.rows() && t <= eval.cols()) {
    for (int s = 0; s < minor_samples; ++s) {
      std::vector<std::size_t> rsel, csel;
      auto pick = [&rng](std::size_t count, std::size_t universe) {
        std::vector<std::size_t> all(universe);
        for (std::size_t i = 0; i < universe; ++i) all[i] = i;
        for (std::size_t i = 0; i < count; ++i) {
          const std::size_t j =
              i + static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(universe - i - 1)));
          std::swap(all[i], all[j]);
        }
        return std::vector<std::size_t>(all.begin(), all.begin() + count);
      };
      rsel = pick(t, eval.rows());
      csel = pick(t, eval.cols());
      RationalMatrix sub(t, t);
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) sub.at(i, j) = eval.at(rsel[i], csel[j]);
      }
      ++cert.minors_sampled;
      if (determinant(sub) != 0) {
        cert.sampled_minors_all_zero = false;
        break;
      }
    }
  }
  cert.pass = cert.matrix_rank <= cert.bound && cert.sampled_minors_all_zero;
  return cert;
}

// ---------------------------------------------------------------------------
// Lifting samples
// ---------------------------------------------------------------------------

struct LiftSample {
  std::map<Elem, Rational> coefficients;  // z_p
  VectorAssignment lifted;                // gamma_p + z_p * q
};

/// For a paving matroid and a rank n-1 collection inside a hyperplane, search
/// the liftability kernel for a non-degenerate lift from q (lifted vectors
/// spanning the whole space). The returned lift is re-verified to lie in the
/// circuit variety.
inline std::optional<LiftSample> sample_lift(const Matroid& m, const VectorAssignment& vectors,
                                             const RationalVector& q, Rng& rng, int tries = 32,
                                             std::int64_t coeff_bound = 9) {
  detail::require_paving(m, "sample_lift");
  std::size_t ambient = 0;
  realize_detail::check_coverage(m, vectors, &ambient);
  if (ambient != static_cast<std::size_t>(m.rank())) {
    throw InputError("sample_lift expects vectors in dimension rank(M)");
  }
  const RationalSubspace span =
      realize_detail::span_of_elems(vectors, m.ground_mask(), ambient);
  if (static_cast<int>(span.dim()) != m.rank() - 1) {
    throw PreconditionError("degenerate collection",
                            "sample_lift requires a collection of rank exactly rank(M)-1");
  }
  if (span.contains(q)) {
    throw PreconditionError("lifting point outside the hyperplane",
                            "q lies in the span of the collection");
  }
  const RationalMatrix eval = evaluate_liftability(m, vectors, q);
  const std::vector<RationalVector> kernel = kernel_basis(eval);
  for (int t = 0; t < tries; ++t) {
    RationalVector z(m.ground_size(), Rational(0));
    for (const auto& k : kernel) {
      const Rational c(rng.uniform_int(-coeff_bound, coeff_bound));
      for (std::size_t i = 0; i < z.size(); ++i) z[i] += c * k[i];
    }
    VectorAssignment lifted;
    for (Elem e = 1; e <= m.ground_size(); ++e) {
      RationalVector v = vectors.at(e);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += z[e - 1] * q[i];
      lifted[e] = std::move(v);
    }
    Mask all = m.ground_mask();
    if (realize_detail::rank_of_elems(lifted, all) != m.rank()) continue;  // degenerate
    const CircuitVarietyResult cv = in_circuit_variety(m, lifted);
    if (!cv.member) {
      throw std::logic_error("kernel lift left the circuit variety");
    }
    LiftSample out;
    for (Elem e = 1; e <= m.ground_size(); ++e) out.coefficients[e] = z[e - 1];
    out.lifted = std::move(lifted);
    return out;
  }
  return std::nullopt;
}

}  // namespace matrovar
