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

#include <optional>
#include <vector>

#include "matrovar/matroid.hpp"
#include "matrovar/sampling.hpp"

namespace matrovar_test {

/// Random small paving matroid: rank 3 or 4, ground up to 9, hyperplanes
/// drawn greedily under the pairwise-intersection bound. Deterministic per
/// seed; used by the property suites.
inline matrovar::Matroid random_paving(matrovar::Rng& rng) {
  using namespace matrovar;
  while (true) {
    const int n = static_cast<int>(rng.uniform_int(3, 4));
    const int ground = static_cast<int>(rng.uniform_int(n + 1, 9));
    const int want = static_cast<int>(rng.uniform_int(0, 4));
    std::vector<ElemSet> hyperplanes;
    std::vector<Mask> masks;
    for (int attempt = 0; attempt < 30 && static_cast<int>(hyperplanes.size()) < want;
         ++attempt) {
      // Sample a candidate hyperplane of size n or n+1.
      const int size =
          n + static_cast<int>(rng.uniform_int(0, ground > n ? 1 : 0));
      Mask h = 0;
      while (mask_size(h) < size) {
        h |= Mask{1} << rng.uniform_int(0, ground - 1);
      }
      bool ok = true;
      for (Mask other : masks) {
        if (mask_size(h & other) > n - 2) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      masks.push_back(h);
      hyperplanes.push_back(set_of(h));
    }
    try {
      return Matroid::paving_from_hyperplanes(ground, n, hyperplanes);
    } catch (const InputError&) {
      // Degenerate draw (for example rank collapse); resample.
    }
  }
}

}  // namespace matrovar_test
