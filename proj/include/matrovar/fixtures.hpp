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

#include <string>
#include <vector>

#include "matrovar/errors.hpp"
#include "matrovar/matroid.hpp"

namespace matrovar {

/// Built-in example matroids: classical incidence configurations plus small
/// uniform matroids, usable by name anywhere the CLI accepts a matroid file.
struct Fixture {
  std::string name;
  std::string description;
  Matroid matroid;
};

inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> kFixtures = [] {
    std::vector<Fixture> out;
    out.push_back({"tcl7", "three concurrent lines: 7 points, 3 lines through point 7",
                   Matroid::paving_from_hyperplanes(
                       7, 3, {{1, 2, 7}, {3, 4, 7}, {5, 6, 7}}, "tcl7")});
    out.push_back({"quad6", "quadrilateral set: 6 points on 4 lines, every point of degree 2",
                   Matroid::paving_from_hyperplanes(
                       6, 3, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {2, 4, 6}}, "quad6")});
    out.push_back({"fano7", "Fano plane: 7 points, 7 lines, every point of degree 3",
                   Matroid::paving_from_hyperplanes(7, 3,
                                                    {{1, 3, 6},
                                                     {2, 3, 5},
                                                     {1, 2, 4},
                                                     {4, 5, 6},
                                                     {2, 6, 7},
                                                     {1, 5, 7},
                                                     {3, 4, 7}},
                                                    "fano7")});
    out.push_back({"je9",
                   "9-point configuration with lines 127, 348, 569, 135, 246; no point of "
                   "degree above 2",
                   Matroid::paving_from_hyperplanes(
                       9, 3, {{1, 2, 7}, {3, 4, 8}, {5, 6, 9}, {1, 3, 5}, {2, 4, 6}}, "je9")});
    out.push_back({"nr11", "rank-4 paving matroid on 11 points with 6 dependent hyperplanes",
                   Matroid::paving_from_hyperplanes(11, 4,
                                                    {{1, 2, 3, 4},
                                                     {1, 2, 5, 6},
                                                     {1, 3, 5, 7},
                                                     {1, 4, 5, 8},
                                                     {2, 3, 5, 9},
                                                     {2, 6, 10, 11}},
                                                    "nr11")});
    out.push_back({"kvt7",
                   "rank-4 paving matroid on 7 points with 5 dependent hyperplanes; special "
                   "with empty P",
                   Matroid::paving_from_hyperplanes(7, 4,
                                                    {{1, 2, 3, 4},
                                                     {1, 2, 5, 6},
                                                     {3, 4, 5, 6},
                                                     {1, 3, 5, 7},
                                                     {2, 4, 6, 7}},
                                                    "kvt7")});
    out.push_back({"sn10", "rank-4 paving matroid on 10 points with a full deletion sequence",
                   Matroid::paving_from_hyperplanes(
                       10, 4, {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 3, 7, 8}, {3, 5, 9, 10}},
                       "sn10")});
    out.push_back({"u_2_4", "uniform matroid of rank 2 on 4 elements",
                   Matroid::from_circuits(4, 2, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}},
                                          "u_2_4")});
    {
      std::vector<ElemSet> circuits;
      for (Mask c : subsets_of_size((Mask{1} << 5) - 1, 4)) circuits.push_back(set_of(c));
      out.push_back({"u_3_5", "uniform matroid of rank 3 on 5 elements",
                     Matroid::from_circuits(5, 3, circuits, "u_3_5")});
    }
    {
      std::vector<ElemSet> circuits;
      for (Mask c : subsets_of_size((Mask{1} << 6) - 1, 5)) circuits.push_back(set_of(c));
      out.push_back({"u_4_6", "uniform matroid of rank 4 on 6 elements",
                     Matroid::from_circuits(6, 4, circuits, "u_4_6")});
    }
    return out;
  }();
  return kFixtures;
}

inline const Fixture& fixture_by_name(const std::string& name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace matrovar
