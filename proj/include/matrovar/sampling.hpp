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
#include <random>
#include <string>
#include <vector>

#include "matrovar/errors.hpp"
#include "matrovar/rational.hpp"
#include "matrovar/subspace.hpp"

namespace matrovar {

inline constexpr std::int64_t kDefaultBound = 1000;
inline constexpr int kDefaultRetries = 64;

/// Seeded generator passed by value or reference through every randomized
/// operation; never shared hidden state. mt19937_64 output is fully specified
/// by the standard, so runs replay identically across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], exact (rejection sampling, no modulo bias).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % range);
  }

 private:
  std::mt19937_64 engine_;
};

inline RationalVector random_integer_vector(std::size_t dim, Rng& rng,
                                            std::int64_t bound = kDefaultBound) {
  RationalVector v(dim);
  for (auto& x : v) x = Rational(rng.uniform_int(-bound, bound));
  return v;
}

/// Nonzero vector with integer entries in [-bound, bound] lying in none of the
/// forbidden subspaces (each must be proper). Membership is checked exactly.
inline RationalVector random_vector_avoiding(std::size_t ambient_dim,
                                             const std::vector<RationalSubspace>& forbidden,
                                             Rng& rng,
                                             std::int64_t bound = kDefaultBound,
                                             int retries = kDefaultRetries) {
  for (const auto& f : forbidden) {
    if (f.dim() >= ambient_dim) {
      throw InputError("random_vector_avoiding: forbidden subspace is not proper");
    }
  }
  for (int t = 0; t < retries; ++t) {
    RationalVector v = random_integer_vector(ambient_dim, rng, bound);
    if (is_zero_vector(v)) continue;
    bool ok = true;
    for (const auto& f : forbidden) {
      if (f.contains(v)) {
        ok = false;
        break;
      }
    }
    if (ok) return v;
  }
  throw GenericityError("random_vector_avoiding: retries exhausted (bound " +
                        std::to_string(bound) + " too small?)");
}

/// Random point of V (integer coordinates over V's basis) outside every listed
/// subspace. Forbidden spaces containing all of V make the search impossible
/// and raise GenericityError immediately.
inline RationalVector random_point_in_subspace_avoiding(
    const RationalSubspace& v_space, const std::vector<RationalSubspace>& forbidden, Rng& rng,
    std::int64_t bound = kDefaultBound, int retries = kDefaultRetries) {
  if (v_space.is_zero()) {
    throw InputError("random_point_in_subspace_avoiding: zero subspace");
  }
  for (const auto& f : forbidden) {
    if (f.contains(v_space)) {
      throw GenericityError(
          "random_point_in_subspace_avoiding: a forbidden subspace contains the whole "
          "sampling space");
    }
  }
  const std::size_t k = v_space.dim();
  const std::size_t n = v_space.ambient_dim();
  for (int t = 0; t < retries; ++t) {
    RationalVector coeff = random_integer_vector(k, rng, bound);
    RationalVector p(n, Rational(0));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) p[j] += coeff[i] * v_space.basis()[i][j];
    }
    if (is_zero_vector(p)) continue;
    bool ok = true;
    for (const auto& f : forbidden) {
      if (f.contains(p)) {
        ok = false;
        break;
      }
    }
    if (ok) return p;
  }
  throw GenericityError("random_point_in_subspace_avoiding: retries exhausted");
}

/// Random subspace of the given dimension, spanned by integer vectors.
inline RationalSubspace random_subspace(std::size_t ambient_dim, std::size_t dim, Rng& rng,
                                        std::int64_t bound = kDefaultBound,
                                        int retries = kDefaultRetries) {
  if (dim > ambient_dim) throw InputError("random_subspace: dim exceeds ambient");
  for (int t = 0; t < retries; ++t) {
    std::vector<RationalVector> rows;
    rows.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) rows.push_back(random_integer_vector(ambient_dim, rng, bound));
    RationalSubspace s = RationalSubspace::span(ambient_dim, rows);
    if (s.dim() == dim) return s;
  }
  throw GenericityError("random_subspace: retries exhausted");
}

}  // namespace matrovar
