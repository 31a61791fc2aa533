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

#include <catch2/catch_amalgamated.hpp>

#include "matrovar/chains.hpp"
#include "matrovar/fixtures.hpp"
#include "random_paving.hpp"

namespace {

using namespace matrovar;
using matrovar_test::random_paving;

// Re-checks a deletion sequence step by step against the stated side
// conditions; independent of the greedy search that produced it.
void verify_deletion_sequence(const Matroid& m, const std::vector<Mask>& seq, ChainKind mode,
                              bool strong) {
  Mask domain = m.ground_mask();
  const int n = m.rank();
  for (Mask l : seq) {
    const ConfigReport rep = config_report_in(m, domain, n);
    bool found = false;
    for (const auto& sc : rep.classes) {
      if (sc.points == l) found = true;
    }
    REQUIRE(found);  // each deleted set is a dependent hyperplane of the current state
    const Mask marked = mode == ChainKind::kNilpotent ? rep.s_points : rep.p_points;
    CHECK(mask_size(l & marked) <= n - 1);
    if (strong) {
      for (int k = 0; k <= n - 2; ++k) {
        int count = 0;
        for (Elem p : set_of(l)) {
          if (rep.degrees.at(p) >= n - k) ++count;
        }
        CHECK(count <= k);
      }
    }
    domain = (domain & ~l) | (l & marked);
  }
  CHECK(subspace_classes_in(m, domain, n).empty());  // no hyperplane survives
}

TEST_CASE("nilpotent chains of the named configurations") {
  SECTION("je9 empties at step 2") {
    const ChainResult c = nilpotent_chain(fixture_by_name("je9").matroid);
    REQUIRE(c.terminated_empty);
    CHECK(c.length == 2);
    CHECK(c.chain[1] == mask_of({1, 2, 3, 4, 5, 6}));
    CHECK(c.chain[2] == 0);
  }
  SECTION("nr11: M1 = {1..6}, M2 = {1,2}, M3 = empty") {
    const ChainResult c = nilpotent_chain(fixture_by_name("nr11").matroid);
    REQUIRE(c.terminated_empty);
    REQUIRE(c.chain.size() == 4);
    CHECK(c.chain[1] == mask_of({1, 2, 3, 4, 5, 6}));
    CHECK(c.chain[2] == mask_of({1, 2}));
    CHECK(c.chain[3] == 0);
    CHECK(c.length == 3);
  }
  SECTION("fano stabilizes at the full ground set") {
    const ChainResult c = nilpotent_chain(fixture_by_name("fano7").matroid);
    CHECK_FALSE(c.terminated_empty);
    REQUIRE(c.stabilized_at.has_value());
    CHECK(*c.stabilized_at == fixture_by_name("fano7").matroid.ground_mask());
  }
  SECTION("three concurrent lines: chain of length 2 through {7}") {
    const ChainResult c = nilpotent_chain(fixture_by_name("tcl7").matroid);
    REQUIRE(c.terminated_empty);
    CHECK(c.length == 2);
    CHECK(c.chain[1] == mask_of({7}));
  }
}

TEST_CASE("solvable chains") {
  SECTION("fano is not solvable") {
    CHECK_FALSE(solvable_chain(fixture_by_name("fano7").matroid).terminated_empty);
  }
  SECTION("three concurrent lines: solvable, length 2") {
    const ChainResult c = solvable_chain(fixture_by_name("tcl7").matroid);
    REQUIRE(c.terminated_empty);
    CHECK(c.length == 2);
    CHECK(c.chain[1] == mask_of({7}));
  }
  SECTION("quadrilateral set: solvable, length 1") {
    const ChainResult c = solvable_chain(fixture_by_name("quad6").matroid);
    REQUIRE(c.terminated_empty);
    CHECK(c.length == 1);
  }
}

TEST_CASE("forest test") {
  SECTION("three concurrent lines form a forest") {
    CHECK(is_forest(fixture_by_name("tcl7").matroid).forest);
  }
  SECTION("je9 has a valid cycle witness") {
    const ForestResult r = is_forest(fixture_by_name("je9").matroid);
    REQUIRE_FALSE(r.forest);
    REQUIRE(r.cycle.has_value());
    const CycleWitness& w = *r.cycle;
    REQUIRE(w.points.size() >= 4);
    REQUIRE(w.points.front() == w.points.back());
    REQUIRE(w.lines.size() == w.points.size() - 1);
    for (std::size_t i = 0; i + 1 < w.points.size(); ++i) {
      const Mask need =
          (Mask{1} << (w.points[i] - 1)) | (Mask{1} << (w.points[i + 1] - 1));
      CHECK(mask_subset(need, w.lines[i]));           // consecutive points on the line
      if (i + 1 < w.lines.size()) CHECK(w.lines[i] != w.lines[i + 1]);
    }
    for (std::size_t i = 1; i + 1 < w.points.size(); ++i) {
      for (std::size_t j = i + 1; j + 1 < w.points.size(); ++j) {
        CHECK(w.points[i] != w.points[j]);            // interior points distinct
      }
    }
  }
  SECTION("a configuration with one line is a forest") {
    const Matroid m = Matroid::paving_from_hyperplanes(4, 3, {{1, 2, 3}});
    CHECK(is_forest(m).forest);
  }
  SECTION("non-rank-3 input is rejected") {
    CHECK_THROWS_AS(is_forest(fixture_by_name("nr11").matroid), InputError);
  }
  SECTION("forest is equivalent to a unit-threshold peel sequence") {
    // Peel characterization: a sequence of lines with |l cap S| <= 1 exists
    // and removes every line iff the configuration is a forest.
    auto peelable = [](const Matroid& m) {
      Mask domain = m.ground_mask();
      while (true) {
        const ConfigReport rep = config_report_in(m, domain, m.rank());
        if (rep.classes.empty()) return true;
        bool advanced = false;
        for (const auto& hp : rep.classes) {
          if (mask_size(hp.points & rep.s_points) <= 1) {
            domain = (domain & ~hp.points) | (hp.points & rep.s_points);
            advanced = true;
            break;
          }
        }
        if (!advanced) return false;
      }
    };
    Rng rng(21);
    int checked = 0;
    while (checked < 40) {
      const Matroid m = random_paving(rng);
      if (m.rank() != 3 || !m.is_simple()) continue;
      ++checked;
      CHECK(is_forest(m).forest == peelable(m));
    }
  }
}

TEST_CASE("weak-nilpotent") {
  CHECK(is_weak_nilpotent(fixture_by_name("je9").matroid));
  CHECK(is_weak_nilpotent(fixture_by_name("nr11").matroid));
  CHECK(is_weak_nilpotent(fixture_by_name("u_3_5").matroid));
  CHECK_FALSE(is_weak_nilpotent(fixture_by_name("fano7").matroid));
}

TEST_CASE("special") {
  SECTION("kvt is special") {
    CHECK(is_special(fixture_by_name("kvt7").matroid).special);
  }
  SECTION("all degrees <= 1 is vacuously special") {
    const Matroid m = Matroid::paving_from_hyperplanes(6, 3, {{1, 2, 3}, {4, 5, 6}});
    CHECK(is_special(m).special);
  }
  SECTION("three hyperplanes through a common pair violate the bound") {
    const Matroid m = Matroid::paving_from_hyperplanes(
        8, 4, {{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}});
    const SpecialResult r = is_special(m);
    REQUIRE_FALSE(r.special);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->class_points.size() == 3);
    CHECK(r.violation->a_L == 1);
    CHECK(r.violation->intersection_rank == 2);
  }
  SECTION("non-solvable input is a precondition error") {
    CHECK_THROWS_AS(is_special(fixture_by_name("fano7").matroid), PreconditionError);
  }
}

TEST_CASE("strong-nilpotent") {
  SECTION("sn10 has a valid 4-hyperplane sequence") {
    const Matroid& m = fixture_by_name("sn10").matroid;
    const StrongNilpotentResult r = is_strong_nilpotent(m);
    REQUIRE(r.strong_nilpotent);
    CHECK(r.sequence.size() == 4);
    CHECK(r.sequence.front() == mask_of({3, 5, 9, 10}));  // the only admissible opener
    verify_deletion_sequence(m, r.sequence, ChainKind::kNilpotent, /*strong=*/true);
  }
  SECTION("a hyperplane-free paving matroid is strong-nilpotent with an empty sequence") {
    const StrongNilpotentResult r = is_strong_nilpotent(fixture_by_name("u_3_5").matroid);
    CHECK(r.strong_nilpotent);
    CHECK(r.sequence.empty());
  }
  SECTION("fano is not strong-nilpotent") {
    CHECK_FALSE(is_strong_nilpotent(fixture_by_name("fano7").matroid).strong_nilpotent);
  }
  SECTION("non-paving input is rejected") {
    const Matroid m = Matroid::from_circuits(5, 3, {{1, 2}, {3, 4, 5}});
    CHECK_THROWS_AS(is_strong_nilpotent(m), InputError);
  }
}

TEST_CASE("deletion sequences") {
  SECTION("je9 nilpotent-mode sequence removes all five lines") {
    const Matroid& m = fixture_by_name("je9").matroid;
    const auto seq = deletion_sequence(m, ChainKind::kNilpotent);
    REQUIRE(seq.has_value());
    CHECK(seq->size() == 5);
    verify_deletion_sequence(m, *seq, ChainKind::kNilpotent, false);
  }
  SECTION("fano has no sequence in either mode") {
    CHECK_FALSE(deletion_sequence(fixture_by_name("fano7").matroid, ChainKind::kNilpotent));
    CHECK_FALSE(deletion_sequence(fixture_by_name("fano7").matroid, ChainKind::kSolvable));
  }
  SECTION("hyperplane-free paving matroids get the empty sequence") {
    const auto seq = deletion_sequence(fixture_by_name("u_4_6").matroid, ChainKind::kNilpotent);
    REQUIRE(seq.has_value());
    CHECK(seq->empty());
  }
  SECTION("quad6 has a solvable-mode sequence but no nilpotent-mode one") {
    const Matroid& m = fixture_by_name("quad6").matroid;
    CHECK_FALSE(deletion_sequence(m, ChainKind::kNilpotent));
    const auto seq = deletion_sequence(m, ChainKind::kSolvable);
    REQUIRE(seq.has_value());
    verify_deletion_sequence(m, *seq, ChainKind::kSolvable, false);
  }
  SECTION("a sequence exists exactly when the matching chain empties") {
    Rng rng(22);
    for (int trial = 0; trial < 60; ++trial) {
      const Matroid m = random_paving(rng);
      CHECK(deletion_sequence(m, ChainKind::kNilpotent).has_value() ==
            nilpotent_chain(m).terminated_empty);
      CHECK(deletion_sequence(m, ChainKind::kSolvable).has_value() ==
            solvable_chain(m).terminated_empty);
    }
  }
}

TEST_CASE("lifting dimension invariant") {
  SECTION("nr11: constants 1,2 and terminal rank 2 give dim 5") {
    const DimCertificate d = lifting_dimension_invariant(fixture_by_name("nr11").matroid);
    CHECK(d.constants == std::vector<int>{1, 2});
    CHECK(d.terminal_rank == 2);
    CHECK(d.dim_value == 5);
  }
  SECTION("uniform matroids: every point lifts freely, dim = ground size") {
    const DimCertificate d = lifting_dimension_invariant(fixture_by_name("u_3_5").matroid);
    CHECK(d.constants == std::vector<int>{5});
    CHECK(d.terminal_rank == 0);
    CHECK(d.dim_value == 5);
  }
  SECTION("three concurrent lines: c1 = 3, terminal rank 1, dim 4") {
    const DimCertificate d = lifting_dimension_invariant(fixture_by_name("tcl7").matroid);
    CHECK(d.constants == std::vector<int>{3});
    CHECK(d.terminal_rank == 1);
    CHECK(d.dim_value == 4);
  }
  SECTION("non-weak-nilpotent input is a precondition error") {
    CHECK_THROWS_AS(lifting_dimension_invariant(fixture_by_name("fano7").matroid),
                    PreconditionError);
  }
}

TEST_CASE("implication lattice on fixtures and random paving matroids") {
  Rng rng(23);
  std::vector<Matroid> pool;
  for (const auto& f : fixtures()) pool.push_back(f.matroid);
  for (int i = 0; i < 40; ++i) pool.push_back(random_paving(rng));
  for (const Matroid& m : pool) {
    const bool nil = nilpotent_chain(m).terminated_empty;
    const bool sol = solvable_chain(m).terminated_empty;
    if (nil) CHECK(sol);
    if (m.rank() == 3 && m.is_simple() && is_forest(m).forest) CHECK(nil);
    if (m.is_paving()) {
      CHECK(is_weak_nilpotent(m) == nil);
      if (is_strong_nilpotent(m).strong_nilpotent) CHECK(nil);
    }
  }
}

TEST_CASE("paving nilpotency matches the full-rank-submatroid characterization") {
  // Exhaustive over all submatroids: nilpotent iff every full-rank submatroid
  // with at least one dependent hyperplane has one meeting S in < n points.
  for (const char* name : {"tcl7", "je9", "fano7", "quad6", "u_3_5"}) {
    const Matroid& m = fixture_by_name(name).matroid;
    const int n = m.rank();
    bool all_good = true;
    for (Mask s = 1; s <= m.ground_mask(); ++s) {
      if (!mask_subset(s, m.ground_mask())) continue;
      if (m.rank_of_mask(s) != n) continue;
      const ConfigReport rep = config_report_in(m, s);
      if (rep.classes.empty()) continue;
      bool has_small = false;
      for (const auto& hp : rep.classes) {
        if (mask_size(hp.points & rep.s_points) <= n - 1) has_small = true;
      }
      if (!has_small) all_good = false;
    }
    CHECK(nilpotent_chain(m).terminated_empty == all_good);
  }
}

}  // namespace
