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

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "matrovar/brackets.hpp"
#include "matrovar/chains.hpp"
#include "matrovar/config.hpp"
#include "matrovar/errors.hpp"
#include "matrovar/matroid.hpp"
#include "matrovar/rational.hpp"
#include "matrovar/realize.hpp"

// JSON surface. nlohmann::json objects keep keys sorted, so identical data
// always serializes to identical bytes.

namespace matrovar {

using Json = nlohmann::json;

inline Json set_to_json(Mask m) {
  Json arr = Json::array();
  for (Elem e : set_of(m)) arr.push_back(e);
  return arr;
}

inline Json vector_to_json(const RationalVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(rational_to_string(x));
  return arr;
}

inline RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("vector must be an array of rational strings");
  RationalVector v;
  for (const auto& x : j) {
    if (x.is_string()) {
      v.push_back(parse_rational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      v.push_back(Rational(x.get<long long>()));
    } else {
      throw InputError("vector entries must be strings like \"p/q\" or integers");
    }
  }
  return v;
}

// --- Matroid -----------------------------------------------------------------

inline Json matroid_to_json(const Matroid& m) {
  Json j;
  if (!m.name().empty()) j["name"] = m.name();
  j["ground_set"] = m.ground_size();
  j["rank"] = m.rank();
  Json sets = Json::array();
  for (Mask c : m.circuits()) sets.push_back(set_to_json(c));
  j["presentation"] = Json{{"kind", "circuits"}, {"sets", sets}};
  return j;
}

inline Matroid matroid_from_json(const Json& j, const MatroidOptions& opts = {}) {
  if (!j.is_object()) throw InputError("matroid JSON must be an object");
  for (const auto& key : {"ground_set", "rank", "presentation"}) {
    if (!j.contains(key)) throw InputError(std::string("matroid JSON missing '") + key + "'");
  }
  const std::string name = j.value("name", std::string());
  const int ground = j.at("ground_set").get<int>();
  const int rank = j.at("rank").get<int>();
  const Json& pres = j.at("presentation");
  if (!pres.contains("kind") || !pres.contains("sets")) {
    throw InputError("presentation needs 'kind' and 'sets'");
  }
  const std::string kind = pres.at("kind").get<std::string>();
  std::vector<ElemSet> sets;
  for (const auto& s : pres.at("sets")) {
    ElemSet set;
    for (const auto& e : s) set.push_back(e.get<int>());
    sets.push_back(std::move(set));
  }
  if (kind == "circuits") return Matroid::from_circuits(ground, rank, sets, name, opts);
  if (kind == "hyperplanes") {
    return Matroid::paving_from_hyperplanes(ground, rank, sets, name, opts);
  }
  throw InputError("presentation kind must be 'circuits' or 'hyperplanes'");
}

// --- Realizations ------------------------------------------------------------

inline Json assignment_to_json(const VectorAssignment& vectors) {
  Json obj = Json::object();
  for (const auto& [e, v] : vectors) obj[std::to_string(e)] = vector_to_json(v);
  return obj;
}

inline Json realization_to_json(const Realization& r) {
  Json j;
  j["dim"] = r.dim;
  j["vectors"] = assignment_to_json(r.vectors);
  j["verified"] = r.verified;
  return j;
}

inline VectorAssignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("vectors must be an object keyed by element");
  VectorAssignment out;
  for (const auto& [key, val] : j.items()) {
    int e = 0;
    try {
      e = std::stoi(key);
    } catch (const std::exception&) {
      throw InputError("vector key '" + key + "' is not an element index");
    }
    out[e] = vector_from_json(val);
  }
  return out;
}

inline Realization realization_from_json(const Json& j, const Matroid& m) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vectors")) {
    throw InputError("realization JSON needs 'dim' and 'vectors'");
  }
  Realization r{m, j.at("dim").get<int>(), assignment_from_json(j.at("vectors")), false};
  return r;
}

// --- Reports -----------------------------------------------------------------

inline Json config_report_to_json(const ConfigReport& rep) {
  Json classes = Json::array();
  for (const auto& sc : rep.classes) {
    classes.push_back(Json{{"id", sc.id},
                           {"points", set_to_json(sc.points)},
                           {"rank", sc.class_rank},
                           {"representative", set_to_json(sc.representative_circuit)}});
  }
  Json incidence = Json::object(), degrees = Json::object(), expected = Json::object();
  for (const auto& [p, ids] : rep.incidence) incidence[std::to_string(p)] = ids;
  for (const auto& [p, d] : rep.degrees) degrees[std::to_string(p)] = d;
  for (const auto& [p, a] : rep.expected_dims) expected[std::to_string(p)] = a;
  return Json{{"rank", rep.domain_rank},
              {"classes", classes},
              {"incidence", incidence},
              {"degrees", degrees},
              {"expected_dims", expected},
              {"s_points", set_to_json(rep.s_points)},
              {"p_points", set_to_json(rep.p_points)},
              {"free_points", set_to_json(rep.free_points)}};
}

inline Json chain_to_json(const ChainResult& c) {
  Json chain = Json::array();
  for (Mask m : c.chain) chain.push_back(set_to_json(m));
  Json j{{"kind", c.kind == ChainKind::kNilpotent ? "nilpotent" : "solvable"},
         {"chain", chain},
         {"terminated_empty", c.terminated_empty},
         {"length", c.length}};
  j["stabilized_at"] = c.stabilized_at ? set_to_json(*c.stabilized_at) : Json();
  return j;
}

inline Json dim_certificate_to_json(const DimCertificate& d) {
  Json prefix = Json::array();
  for (Mask m : d.chain_prefix) prefix.push_back(set_to_json(m));
  return Json{{"dim", d.dim_value},
              {"constants", d.constants},
              {"terminal_rank", d.terminal_rank},
              {"chain_prefix", prefix}};
}

inline Json bracket_polynomial_to_json(const BracketPolynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms) {
    Json brackets = Json::array();
    for (const auto& b : t.brackets) brackets.push_back(Json::array({b[0], b[1], b[2]}));
    terms.push_back(Json{{"coef", rational_to_string(t.coefficient)}, {"brackets", brackets}});
  }
  return Json{{"terms", terms}};
}

inline Json liftability_matrix_to_json(const LiftabilityMatrix& lm) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < lm.rows.size(); ++r) {
    Json entries = Json::object();
    for (Elem e = 1; e <= lm.ground_size; ++e) {
      const auto it = lm.entries.find({r, e});
      if (it == lm.entries.end()) continue;
      const SignedBracketToken& tok = it->second;
      Json points = Json::array();
      for (Elem p : tok.points) points.push_back(p);
      points.push_back("q");
      entries[std::to_string(e)] =
          Json{{"sign", tok.sign}, {"points", points}, {"row_subset", set_to_json(tok.row_subset)}};
    }
    rows.push_back(Json{{"circuit", set_to_json(lm.rows[r].circuit)},
                        {"row_subset", set_to_json(lm.rows[r].k_subset)},
                        {"entries", entries}});
  }
  return Json{{"ground_size", lm.ground_size}, {"rank", lm.rank}, {"rows", rows}};
}

inline Json stable_report_to_json(const StableReport& rep) {
  Json per_point = Json::object();
  for (const auto& [p, pc] : rep.per_point) {
    per_point[std::to_string(p)] = Json{
        {"level", pc.level}, {"expected", pc.expected}, {"actual", pc.actual}, {"ok", pc.ok}};
  }
  return Json{{"stable", rep.stable},
              {"quasi_stable_levels", rep.quasi_stable_levels},
              {"per_point", per_point}};
}

inline Json minor_certificate_to_json(const MinorCertificate& c) {
  return Json{{"bound_kind",
               c.kind == BoundKind::kWeakNilpotentDim ? "thm-dim" : "rank-projection"},
              {"matrix_rank", c.matrix_rank},
              {"bound", c.bound},
              {"minor_size", c.minor_size},
              {"rows", c.rows},
              {"cols", c.cols},
              {"minors_sampled", c.minors_sampled},
              {"sampled_minors_all_zero", c.sampled_minors_all_zero},
              {"pass", c.pass}};
}

}  // namespace matrovar
