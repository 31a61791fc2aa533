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
#include <array>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "matrovar/config.hpp"
#include "matrovar/errors.hpp"
#include "matrovar/matrix.hpp"
#include "matrovar/matroid.hpp"
#include "matrovar/rational.hpp"

namespace matrovar {

/// One bracket [a b c]: a 3x3 determinant of the named point vectors.
/// Canonical form keeps the symbols sorted; the sorting sign is absorbed by
/// the owning monomial's coefficient. Brackets with a repeated symbol are
/// identically zero and never stored.
using Bracket = std::array<Elem, 3>;

struct BracketMonomial {
  Rational coefficient;
  std::vector<Bracket> brackets;  // sorted multiset
};

/// Formal sum of bracket monomials in canonical order: no two terms share a
/// bracket multiset, no zero coefficients.
struct BracketPolynomial {
  std::vector<BracketMonomial> terms;

  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const BracketPolynomial& a, const BracketPolynomial& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
      if (a.terms[i].coefficient != b.terms[i].coefficient ||
          a.terms[i].brackets != b.terms[i].brackets) {
        return false;
      }
    }
    return true;
  }
};

namespace bracket_detail {

/// Sorts the three symbols, returning the permutation sign, or 0 when a
/// symbol repeats.
inline int normalize_bracket(Bracket& b) {
  int sign = 1;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2 - i; ++j) {
      if (b[j] > b[j + 1]) {
        std::swap(b[j], b[j + 1]);
        sign = -sign;
      }
    }
  }
  if (b[0] == b[1] || b[1] == b[2]) return 0;
  return sign;
}

}  // namespace bracket_detail

/// Builds the canonical form from raw (coefficient, bracket list) terms:
/// normalizes each bracket, sorts brackets within a term, merges like terms,
/// drops zeros.
inline BracketPolynomial make_bracket_polynomial(
    std::vector<std::pair<Rational, std::vector<Bracket>>> raw_terms) {
  std::map<std::vector<Bracket>, Rational> acc;
  for (auto& [coef, brackets] : raw_terms) {
    if (coef == 0) continue;
    Rational c = coef;
    bool zero = false;
    for (auto& b : brackets) {
      const int sign = bracket_detail::normalize_bracket(b);
      if (sign == 0) {
        zero = true;
        break;
      }
      if (sign < 0) c = -c;
    }
    if (zero) continue;
    std::sort(brackets.begin(), brackets.end());
    acc[brackets] += c;
  }
  BracketPolynomial p;
  for (auto& [brackets, coef] : acc) {
    if (coef == 0) continue;
    p.terms.push_back(BracketMonomial{coef, brackets});
  }
  return p;
}

inline BracketPolynomial negate(const BracketPolynomial& p) {
  BracketPolynomial out = p;
  for (auto& t : out.terms) t.coefficient = -t.coefficient;
  return out;
}

/// Scale-normalized copy: coefficients divided by their common rational
/// content, leading coefficient positive. Two polynomials that differ by a
/// nonzero scalar have equal primitive forms; used to deduplicate.
inline BracketPolynomial primitive_form(const BracketPolynomial& p) {
  if (p.is_zero()) return p;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& t : p.terms) {
    num_gcd = gcd(num_gcd, Int(numerator(t.coefficient) < 0 ? -numerator(t.coefficient)
                                                            : numerator(t.coefficient)));
    den_lcm = lcm(den_lcm, denominator(t.coefficient));
  }
  Rational scale(den_lcm, num_gcd);
  if (p.terms.front().coefficient < 0) scale = -scale;
  BracketPolynomial out = p;
  for (auto& t : out.terms) t.coefficient *= scale;
  return out;
}

inline bool equal_up_to_sign(const BracketPolynomial& a, const BracketPolynomial& b) {
  return a == b || a == negate(b);
}

/// The symbols occurring in the polynomial.
inline std::set<Elem> bracket_symbols(const BracketPolynomial& p) {
  std::set<Elem> out;
  for (const auto& t : p.terms) {
    for (const auto& b : t.brackets) out.insert(b.begin(), b.end());
  }
  return out;
}

namespace bracket_detail {

/// Checks the incidence data for a substitution at x: two distinct lines of
/// the configuration through x, with p1,p2 on the first and p3,p4 on the
/// second, all different from x.
inline void validate_substitution(const std::vector<SubspaceClass>& lines, Elem x, Elem p1,
                                  Elem p2, Elem p3, Elem p4) {
  if (p1 == p2 || p3 == p4 || p1 == x || p2 == x || p3 == x || p4 == x) {
    throw InputError("substitution points must be four points distinct from the pivot");
  }
  auto on_common_line = [&](Elem a, Elem b, Elem c) {
    for (const auto& l : lines) {
      const Mask need = (Mask{1} << (a - 1)) | (Mask{1} << (b - 1)) | (Mask{1} << (c - 1));
      if (mask_subset(need, l.points)) return true;
    }
    return false;
  };
  if (!on_common_line(x, p1, p2)) {
    throw InputError("invalid incidence: no line contains the pivot and the first point pair");
  }
  if (!on_common_line(x, p3, p4)) {
    throw InputError("invalid incidence: no line contains the pivot and the second point pair");
  }
  // The two lines are distinct because two lines share at most one point and
  // both pairs avoid x; still, reject the degenerate all-on-one-line case.
  for (const auto& l : lines) {
    Mask need = Mask{1} << (x - 1);
    for (Elem e : {p1, p2, p3, p4}) need |= Mask{1} << (e - 1);
    if (mask_subset(need, l.points)) {
      throw InputError("invalid incidence: all five points lie on one line");
    }
  }
}

}  // namespace bracket_detail

struct SubstitutionResult {
  BracketPolynomial polynomial;
  bool substituted = false;  // false when x did not occur
};

/// Replaces the point x, seen as the intersection of two lines through it, by
/// [p1 p2 p3] p4 - [p1 p2 p4] p3: every bracket [x a b] expands to
/// [p1 p2 p3][p4 a b] - [p1 p2 p4][p3 a b], multilinearly across the term.
inline SubstitutionResult substitute_point(const BracketPolynomial& p, const Matroid& config,
                                           Elem x, Elem p1, Elem p2, Elem p3, Elem p4) {
  if (config.rank() != 3 || !config.is_simple()) {
    throw InputError("substitution requires a simple rank-3 configuration");
  }
  bracket_detail::validate_substitution(subspace_classes(config), x, p1, p2, p3, p4);
  if (!bracket_symbols(p).count(x)) return SubstitutionResult{p, false};

  std::vector<std::pair<Rational, std::vector<Bracket>>> raw;
  for (const auto& term : p.terms) {
    // Expand each bracket containing x into its two replacement halves.
    std::vector<std::pair<Rational, std::vector<Bracket>>> partial{{term.coefficient, {}}};
    for (const auto& b : term.brackets) {
      const bool has_x = b[0] == x || b[1] == x || b[2] == x;
      if (!has_x) {
        for (auto& [c, bs] : partial) bs.push_back(b);
        continue;
      }
      Elem a1 = 0, a2 = 0;
      for (Elem e : b) {
        if (e == x) continue;
        (a1 == 0 ? a1 : a2) = e;
      }
      // b is canonical; moving x to the front costs a sign.
      int move_sign = 1;
      if (b[1] == x) move_sign = -1;  // [a x b] = -[x a b]
      // b[0] == x and b[2] == x keep / flip twice respectively: even cycles.
      std::vector<std::pair<Rational, std::vector<Bracket>>> next;
      for (auto& [c, bs] : partial) {
        {
          auto plus = bs;
          plus.push_back(Bracket{p1, p2, p3});
          plus.push_back(Bracket{p4, a1, a2});
          next.emplace_back(c * move_sign, std::move(plus));
        }
        {
          auto minus = bs;
          minus.push_back(Bracket{p1, p2, p4});
          minus.push_back(Bracket{p3, a1, a2});
          next.emplace_back(c * move_sign * -1, std::move(minus));
        }
      }
      partial = std::move(next);
    }
    for (auto& t : partial) raw.push_back(std::move(t));
  }
  return SubstitutionResult{make_bracket_polynomial(std::move(raw)), true};
}

struct GmResult {
  std::vector<BracketPolynomial> polynomials;  // canonical, duplicate-free
  bool stabilized = false;   // a full pass added no new canonical forms
  int depth_reached = 0;     // number of substitution rounds performed
};

/// Generates the bracket-polynomial family of a rank-3 configuration: the
/// 3-circuit brackets, closed under single-point substitutions over all
/// degree->=2 points and all valid line/point choices, up to max_depth rounds
/// or syntactic stabilization over primitive canonical forms. Everything
/// emitted vanishes on every realization of the configuration; the syntactic
/// cutoff may under-approximate the full ideal.
inline GmResult generate_gm(const Matroid& config, int max_depth) {
  if (config.rank() != 3 || !config.is_simple()) {
    throw InputError("bracket-family generation requires a simple rank-3 configuration");
  }
  const std::vector<SubspaceClass> lines = subspace_classes(config);
  const ConfigReport rep = config_report(config);

  GmResult res;
  std::set<std::vector<std::pair<std::string, std::vector<Bracket>>>> seen;  // structural keys
  auto key_of = [](const BracketPolynomial& p) {
    std::vector<std::pair<std::string, std::vector<Bracket>>> key;
    for (const auto& t : p.terms) key.emplace_back(rational_to_string(t.coefficient), t.brackets);
    return key;
  };
  auto add = [&](const BracketPolynomial& p) {
    if (p.is_zero()) return false;
    const BracketPolynomial prim = primitive_form(p);
    if (!seen.insert(key_of(prim)).second) return false;
    res.polynomials.push_back(prim);
    return true;
  };

  for (Mask c : config.circuits()) {
    if (mask_size(c) != 3) continue;
    const ElemSet pts = set_of(c);
    add(make_bracket_polynomial({{Rational(1), {Bracket{pts[0], pts[1], pts[2]}}}}));
  }

  // Substitution choices: pivot x of degree >= 2, ordered pair of distinct
  // lines through x, ordered point pairs on each line avoiding x.
  struct Choice {
    Elem x, p1, p2, p3, p4;
  };
  std::vector<Choice> choices;
  for (Elem x = 1; x <= config.ground_size(); ++x) {
    const auto it = rep.incidence.find(x);
    if (it == rep.incidence.end() || it->second.size() < 2) continue;
    const auto& lx = it->second;
    for (int i : lx) {
      for (int j : lx) {
        if (i == j) continue;
        const ElemSet l1 = set_of(lines[i].points & ~(Mask{1} << (x - 1)));
        const ElemSet l2 = set_of(lines[j].points & ~(Mask{1} << (x - 1)));
        for (Elem p1 : l1) {
          for (Elem p2 : l1) {
            if (p1 == p2) continue;
            for (Elem p3 : l2) {
              for (Elem p4 : l2) {
                if (p3 == p4) continue;
                choices.push_back(Choice{x, p1, p2, p3, p4});
              }
            }
          }
        }
      }
    }
  }

  if (choices.empty()) {
    res.stabilized = true;  // no substitutions possible: stable at depth 0
    return res;
  }
  std::size_t frontier_begin = 0;
  for (int depth = 1; depth <= max_depth; ++depth) {
    const std::size_t frontier_end = res.polynomials.size();
    bool grew = false;
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      const BracketPolynomial p = res.polynomials[i];  // copy: vector grows below
      const std::set<Elem> symbols = bracket_symbols(p);
      for (const Choice& ch : choices) {
        if (!symbols.count(ch.x)) continue;
        SubstitutionResult sub = substitute_point(p, config, ch.x, ch.p1, ch.p2, ch.p3, ch.p4);
        if (add(sub.polynomial)) grew = true;
      }
    }
    frontier_begin = frontier_end;
    if (!grew) {
      res.stabilized = true;  // a full pass added nothing: syntactically stable
      break;
    }
    res.depth_reached = depth;
  }
  return res;
}

/// Exact evaluation on a dim-3 vector assignment: each bracket is the
/// determinant of the three named vectors, in bracket order.
inline Rational evaluate_bracket_poly(const BracketPolynomial& p,
                                      const std::map<Elem, RationalVector>& vectors) {
  Rational total = 0;
  for (const auto& term : p.terms) {
    Rational prod = term.coefficient;
    for (const auto& b : term.brackets) {
      RationalMatrix m(3, 3);
      for (int c = 0; c < 3; ++c) {
        const auto it = vectors.find(b[c]);
        if (it == vectors.end()) {
          throw InputError("evaluation: no vector for point " + std::to_string(b[c]));
        }
        if (it->second.size() != 3) {
          throw InputError("evaluation: bracket polynomials need dimension-3 vectors");
        }
        for (int r = 0; r < 3; ++r) m.at(r, c) = it->second[r];
      }
      prod *= determinant(m);
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

}  // namespace matrovar
