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
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matrovar/errors.hpp"
#include "matrovar/rational.hpp"
#include "matrovar/matrix.hpp"

namespace matrovar {

/// Ground set elements are 1-based; subsets are bitmasks with bit (e-1) for
/// element e. Ground sets are capped (default 20) because the rank oracle is
/// exponential in the worst case; the cap can be raised up to 32.
using Elem = int;
using Mask = std::uint32_t;
using ElemSet = std::vector<Elem>;

inline constexpr int kDefaultMaxGround = 20;
inline constexpr int kHardMaxGround = 32;

inline Mask mask_of(const ElemSet& s) {
  Mask m = 0;
  for (Elem e : s) m |= Mask{1} << (e - 1);
  return m;
}

inline ElemSet set_of(Mask m) {
  ElemSet s;
  for (int e = 1; m != 0; ++e, m >>= 1) {
    if (m & 1) s.push_back(e);
  }
  return s;
}

inline int mask_size(Mask m) { return std::popcount(m); }

inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// All k-subsets of the set bits of `domain`, in lexicographic order of the
/// corresponding sorted element lists.
inline std::vector<Mask> subsets_of_size(Mask domain, int k) {
  ElemSet elems = set_of(domain);
  std::vector<Mask> out;
  if (k < 0 || k > static_cast<int>(elems.size())) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << (elems[i] - 1);
    out.push_back(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(elems.size()) - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct MatroidOptions {
  bool check_exchange = false;
  int max_ground = kDefaultMaxGround;
};

/// A loop-free matroid given by its circuit family, with a memoized rank
/// oracle. Immutable after construction; the cache fill is idempotent and
/// mutex-guarded so concurrent reads behave like a pure function.
class Matroid {
 public:
  /// Validates and canonicalizes a circuit presentation. Throws InputError on
  /// nested circuits, loops, out-of-range elements or a rank mismatch.
  static Matroid from_circuits(int ground_size, int rank, const std::vector<ElemSet>& circuits,
                               std::string name = {}, const MatroidOptions& opts = {}) {
    if (ground_size < 1) throw InputError("ground size must be at least 1");
    if (opts.max_ground > kHardMaxGround) {
      throw InputError("ground-set cap cannot exceed " + std::to_string(kHardMaxGround));
    }
    if (ground_size > opts.max_ground) {
      throw InputError("ground size " + std::to_string(ground_size) +
                       " exceeds the cap of " + std::to_string(opts.max_ground) +
                       " (the rank oracle is exponential; raise the cap explicitly if needed)");
    }
    std::vector<Mask> cs;
    for (const auto& c : circuits) {
      for (Elem e : c) {
        if (e < 1 || e > ground_size) {
          throw InputError("circuit element " + std::to_string(e) + " out of range");
        }
      }
      Mask m = mask_of(c);
      if (mask_size(m) == 1) {
        throw InputError("loop: singleton circuit {" + std::to_string(c.front()) + "}");
      }
      if (mask_size(m) == 0) throw InputError("empty circuit");
      cs.push_back(m);
    }
    std::sort(cs.begin(), cs.end(), mask_less);
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (i != j && mask_subset(cs[i], cs[j])) {
          throw InputError("circuit axiom violated: " + set_to_string(cs[i]) +
                           " is contained in " + set_to_string(cs[j]));
        }
      }
    }
    Matroid m(ground_size, rank, std::move(cs), std::move(name));
    const int computed = m.rank_of_mask(m.ground_mask());
    if (computed != rank) {
      throw InputError("declared rank " + std::to_string(rank) + " but computed rank is " +
                       std::to_string(computed));
    }
    for (Mask c : m.circuits_) {
      if (mask_size(c) > rank + 1) {
        throw InputError("circuit " + set_to_string(c) + " larger than rank+1");
      }
    }
    if (opts.check_exchange) m.check_circuit_exchange();
    return m;
  }

  /// Builds an n-paving matroid from its dependent hyperplanes. Valid iff the
  /// hyperplane point sets pairwise intersect in at most n-2 elements; the
  /// circuits are all n-subsets of hyperplanes plus all (n+1)-subsets that
  /// contain no such n-subset.
  static Matroid paving_from_hyperplanes(int ground_size, int n,
                                         const std::vector<ElemSet>& hyperplanes,
                                         std::string name = {}, const MatroidOptions& opts = {}) {
    if (n < 1) throw InputError("paving rank must be at least 1");
    if (ground_size < n + 1) {
      throw InputError("paving matroid needs ground size at least rank+1");
    }
    std::vector<Mask> hs;
    for (const auto& h : hyperplanes) {
      for (Elem e : h) {
        if (e < 1 || e > ground_size) {
          throw InputError("hyperplane element " + std::to_string(e) + " out of range");
        }
      }
      Mask m = mask_of(h);
      if (mask_size(m) < n) {
        throw InputError("hyperplane " + set_to_string(m) + " has fewer than " +
                         std::to_string(n) + " points");
      }
      hs.push_back(m);
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        if (mask_size(hs[i] & hs[j]) > n - 2) {
          throw InputError("not a paving matroid: hyperplanes " + set_to_string(hs[i]) + " and " +
                           set_to_string(hs[j]) + " share more than " + std::to_string(n - 2) +
                           " points");
        }
      }
    }
    const Mask ground = ground_size == 32 ? ~Mask{0} : (Mask{1} << ground_size) - 1;
    std::vector<ElemSet> circuits;
    for (Mask h : hs) {
      for (Mask c : subsets_of_size(h, n)) circuits.push_back(set_of(c));
    }
    for (Mask c : subsets_of_size(ground, n + 1)) {
      bool contains_small = false;
      for (Mask h : hs) {
        if (mask_size(c & h) >= n) {
          contains_small = true;
          break;
        }
      }
      if (!contains_small) circuits.push_back(set_of(c));
    }
    return from_circuits(ground_size, n, circuits, std::move(name), opts);
  }

  int ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const std::vector<Mask>& circuits() const { return circuits_; }
  Mask ground_mask() const {
    return ground_size_ == 32 ? ~Mask{0} : (Mask{1} << ground_size_) - 1;
  }

  bool is_paving() const {
    for (Mask c : circuits_) {
      const int k = mask_size(c);
      if (k != rank_ && k != rank_ + 1) return false;
    }
    return true;
  }

  /// No circuit of size <= 2 (loop-freeness is already guaranteed).
  bool is_simple() const {
    for (Mask c : circuits_) {
      if (mask_size(c) <= 2) return false;
    }
    return true;
  }

  bool independent(Mask s) const { return first_circuit_within(s) == 0; }

  /// Size of a maximum subset of S containing no circuit. Memoized.
  int rank_of_mask(Mask s) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->rank.find(s);
      if (it != cache_->rank.end()) return it->second;
    }
    const Mask c = first_circuit_within(s);
    int r;
    if (c == 0) {
      r = mask_size(s);
    } else {
      r = 0;
      for (Elem e : set_of(c)) {
        r = std::max(r, rank_of_mask(s & ~(Mask{1} << (e - 1))));
        if (r == mask_size(s) - 1) break;  // cannot do better for dependent S
      }
    }
    std::lock_guard<std::mutex> lock(cache_->mutex);
    cache_->rank.emplace(s, r);
    return r;
  }

  int rank_of(const ElemSet& s) const {
    check_elements(s);
    return rank_of_mask(mask_of(s));
  }

  Mask closure_mask(Mask s) const {
    const int r = rank_of_mask(s);
    Mask cl = s;
    for (Elem e = 1; e <= ground_size_; ++e) {
      const Mask b = Mask{1} << (e - 1);
      if ((s & b) != 0) continue;
      if (rank_of_mask(s | b) == r) cl |= b;
    }
    return cl;
  }

  /// {x : rank(S + x) = rank(S)}. Loop-free, so closure(empty) is empty.
  ElemSet closure(const ElemSet& s) const {
    check_elements(s);
    return set_of(closure_mask(mask_of(s)));
  }

  std::vector<Mask> circuits_within(Mask s) const {
    std::vector<Mask> out;
    for (Mask c : circuits_) {
      if (mask_subset(c, s)) out.push_back(c);
    }
    return out;
  }

  struct Restriction;

  /// Submatroid on S, relabeled to 1..|S| (order preserving). Circuits are the
  /// circuits of this matroid contained in S.
  Restriction restrict(const ElemSet& s) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_size_ == b.ground_size_ && a.rank_ == b.rank_ && a.circuits_ == b.circuits_;
  }

  static bool mask_less(Mask a, Mask b) { return set_of(a) < set_of(b); }

  static std::string set_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (Elem e : set_of(m)) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  Matroid(int ground_size, int rank, std::vector<Mask> circuits, std::string name)
      : ground_size_(ground_size),
        rank_(rank),
        circuits_(std::move(circuits)),
        name_(std::move(name)),
        cache_(std::make_shared<Cache>()) {}

  void check_elements(const ElemSet& s) const {
    for (Elem e : s) {
      if (e < 1 || e > ground_size_) {
        throw InputError("element " + std::to_string(e) + " out of range 1.." +
                         std::to_string(ground_size_));
      }
    }
  }

  Mask first_circuit_within(Mask s) const {
    for (Mask c : circuits_) {
      if (mask_subset(c, s)) return c;
    }
    return 0;
  }

  void check_circuit_exchange() const {
    for (std::size_t i = 0; i < circuits_.size(); ++i) {
      for (std::size_t j = 0; j < circuits_.size(); ++j) {
        if (i == j) continue;
        const Mask common = circuits_[i] & circuits_[j];
        for (Elem e : set_of(common)) {
          const Mask u = (circuits_[i] | circuits_[j]) & ~(Mask{1} << (e - 1));
          if (first_circuit_within(u) == 0) {
            throw InputError("circuit exchange fails for " + set_to_string(circuits_[i]) +
                             ", " + set_to_string(circuits_[j]) + " at element " +
                             std::to_string(e));
          }
        }
      }
    }
  }

  struct Cache {
    std::mutex mutex;
    std::map<Mask, int> rank;
  };

  int ground_size_;
  int rank_;
  std::vector<Mask> circuits_;  // canonical order, pairwise incomparable
  std::string name_;
  std::shared_ptr<Cache> cache_;
};

struct Matroid::Restriction {
  Matroid matroid;
  // old_of_new[i] is the original label of new element i+1.
  ElemSet old_of_new;
  std::map<Elem, Elem> new_of_old;
};

inline Matroid::Restriction Matroid::restrict(const ElemSet& s) const {
  check_elements(s);
  const Mask sm = mask_of(s);
  ElemSet old_of_new = set_of(sm);
  if (old_of_new.empty()) throw InputError("cannot restrict to the empty set");
  std::map<Elem, Elem> new_of_old;
  for (std::size_t i = 0; i < old_of_new.size(); ++i) {
    new_of_old[old_of_new[i]] = static_cast<Elem>(i + 1);
  }
  std::vector<ElemSet> circuits;
  for (Mask c : circuits_within(sm)) {
    ElemSet relabeled;
    for (Elem e : set_of(c)) relabeled.push_back(new_of_old.at(e));
    circuits.push_back(std::move(relabeled));
  }
  MatroidOptions opts;
  opts.max_ground = std::max(kDefaultMaxGround, ground_size_);
  Matroid sub = from_circuits(static_cast<int>(old_of_new.size()), rank_of_mask(sm), circuits,
                              name_.empty() ? std::string() : name_ + "|restriction", opts);
  return Restriction{std::move(sub), std::move(old_of_new), std::move(new_of_old)};
}

/// Matroid of a finite vector collection: minimal dependent subsets found by
/// exact rank tests, sizes up to dim+1. Zero vectors are loops and rejected.
inline Matroid matroid_of_vectors(int dim, const std::map<Elem, RationalVector>& vectors,
                                  std::string name = {}, const MatroidOptions& opts = {}) {
  if (vectors.empty()) throw InputError("matroid_of_vectors: no vectors");
  int ground_size = 0;
  for (const auto& [e, v] : vectors) {
    if (e < 1) throw InputError("matroid_of_vectors: elements must be positive");
    if (static_cast<int>(v.size()) != dim) {
      throw InputError("matroid_of_vectors: vector for element " + std::to_string(e) +
                       " has wrong length");
    }
    if (is_zero_vector(v)) {
      throw InputError("loop: zero vector at element " + std::to_string(e));
    }
    ground_size = std::max(ground_size, e);
  }
  if (static_cast<int>(vectors.size()) != ground_size) {
    throw InputError("matroid_of_vectors: elements must be exactly 1..ground");
  }
  auto rank_of_subset = [&](Mask s) {
    std::vector<RationalVector> cols;
    for (Elem e : set_of(s)) cols.push_back(vectors.at(e));
    if (cols.empty()) return 0;
    return static_cast<int>(rank(RationalMatrix::from_columns(cols)));
  };
  const Mask ground = ground_size == 32 ? ~Mask{0} : (Mask{1} << ground_size) - 1;
  const int total_rank = rank_of_subset(ground);
  std::vector<Mask> found;
  std::vector<ElemSet> circuits;
  for (int size = 2; size <= std::min(ground_size, total_rank + 1); ++size) {
    for (Mask s : subsets_of_size(ground, size)) {
      bool has_sub = false;
      for (Mask c : found) {
        if (mask_subset(c, s)) {
          has_sub = true;
          break;
        }
      }
      if (has_sub) continue;
      if (rank_of_subset(s) < size) {
        found.push_back(s);
        circuits.push_back(set_of(s));
      }
    }
  }
  return Matroid::from_circuits(ground_size, total_rank, circuits, std::move(name), opts);
}

}  // namespace matrovar
