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

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matrovar/brackets.hpp"
#include "matrovar/chains.hpp"
#include "matrovar/config.hpp"
#include "matrovar/errors.hpp"
#include "matrovar/fixtures.hpp"
#include "matrovar/json_io.hpp"
#include "matrovar/realize.hpp"
#include "matrovar/sampling.hpp"

namespace matrovar {

/// One CLI invocation. Commands are thin dispatchers over the library; all
/// mathematics lives in the modules above.
struct CommandRequest {
  std::string command;
  std::vector<std::string> inputs;  // file paths
  std::optional<std::string> fixture;
  std::uint64_t seed = 0;
  std::int64_t bound = kDefaultBound;
  int retries = kDefaultRetries;
  int depth = 3;
  std::string format = "json";              // json | text
  std::string mode = "nilpotent";           // nilpotent | solvable
  std::string bound_kind = "thm25";         // thm25 | prop68
  std::optional<int> max_ground;            // else MATROVAR_MAX_GROUND or default
};

struct Report {
  Json json;
  int exit_code = 0;
};

namespace cli_detail {

inline MatroidOptions options_from(const CommandRequest& req) {
  MatroidOptions opts;
  if (req.max_ground) {
    opts.max_ground = *req.max_ground;
  } else if (const char* env = std::getenv("MATROVAR_MAX_GROUND")) {
    try {
      opts.max_ground = std::stoi(env);
    } catch (const std::exception&) {
      throw InputError("MATROVAR_MAX_GROUND is not an integer");
    }
  }
  return opts;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

inline Matroid load_matroid(const CommandRequest& req) {
  if (req.fixture) {
    if (!req.inputs.empty()) throw InputError("give either a fixture name or an input path");
    return fixture_by_name(*req.fixture).matroid;
  }
  if (req.inputs.empty()) throw InputError("command needs a matroid (path or --fixture)");
  return matroid_from_json(load_json_file(req.inputs[0]), options_from(req));
}

inline Realization load_realization(const CommandRequest& req, const Matroid& m,
                                    std::size_t index) {
  if (req.inputs.size() <= index) {
    throw InputError("command needs a realization JSON as input #" + std::to_string(index + 1));
  }
  return realization_from_json(load_json_file(req.inputs[index]), m);
}

inline Json classify_json(const Matroid& m) {
  Json j;
  const ChainResult nil = nilpotent_chain(m);
  const ChainResult sol = solvable_chain(m);
  j["nilpotent"] = nil.terminated_empty;
  j["solvable"] = sol.terminated_empty;
  j["weak_nilpotent"] = is_weak_nilpotent(m);
  j["paving"] = m.is_paving();
  if (m.rank() == 3 && m.is_simple()) {
    j["forest"] = is_forest(m).forest;
  }
  if (m.is_paving()) {
    const StrongNilpotentResult sn = is_strong_nilpotent(m);
    j["strong_nilpotent"] = sn.strong_nilpotent;
  }
  if (sol.terminated_empty) {
    j["special"] = is_special(m).special;
  }
  return j;
}

}  // namespace cli_detail

/// Executes one request. Exit code 0 = success/pass, 1 = mathematical
/// failure, 2 = input or usage error. This function throws nothing; errors
/// are folded into the report.
inline Report run(const CommandRequest& req) {
  Report rep;
  Json& out = rep.json;
  out["command"] = req.command;
  out["seed"] = req.seed;
  bool pass = true;
  try {
    Rng rng(req.seed);
    if (req.command == "fixtures") {
      Json list = Json::array();
      for (const auto& f : fixtures()) {
        list.push_back(Json{{"name", f.name},
                            {"description", f.description},
                            {"matroid", matroid_to_json(f.matroid)}});
      }
      out["result"] = list;
    } else if (req.command == "validate") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      out["result"] = Json{{"valid", true},
                           {"ground_set", m.ground_size()},
                           {"rank", m.rank()},
                           {"circuits", static_cast<int>(m.circuits().size())},
                           {"paving", m.is_paving()}};
    } else if (req.command == "report") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      out["result"] = config_report_to_json(config_report(m));
    } else if (req.command == "chain") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      const ChainKind kind =
          req.mode == "solvable" ? ChainKind::kSolvable : ChainKind::kNilpotent;
      Json j = chain_to_json(kind == ChainKind::kSolvable ? solvable_chain(m)
                                                          : nilpotent_chain(m));
      if (m.is_paving()) {
        const auto seq = deletion_sequence(m, kind);
        if (seq) {
          Json arr = Json::array();
          for (Mask l : *seq) arr.push_back(set_to_json(l));
          j["deletion_sequence"] = arr;
        } else {
          j["deletion_sequence"] = Json();
        }
      }
      out["result"] = j;
    } else if (req.command == "classify") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      out["result"] = cli_detail::classify_json(m);
    } else if (req.command == "dim") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      out["result"] = dim_certificate_to_json(lifting_dimension_invariant(m));
    } else if (req.command == "realize") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      const Realization r = realize_nilpotent(m, rng, req.bound, req.retries);
      out["result"] = realization_to_json(r);
    } else if (req.command == "stable-realize") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      auto [r, stab] = realize_stable_special(m, rng, req.bound, req.retries);
      out["result"] =
          Json{{"realization", realization_to_json(r)}, {"stable", stable_report_to_json(stab)}};
    } else if (req.command == "liftmat") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      out["result"] = liftability_matrix_to_json(liftability_matrix(m));
    } else if (req.command == "liftdim") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      Realization r = req.inputs.size() > (req.fixture ? 0u : 1u)
                          ? cli_detail::load_realization(req, m, req.fixture ? 0 : 1)
                          : realize_nilpotent(m, rng, req.bound, req.retries);
      const RationalVector q = sample_outside_point(m, r.vectors, rng, req.bound, req.retries);
      const int dim = lifting_dimension_at(m, r.vectors, q);
      out["result"] = Json{{"lifting_dimension", dim}, {"q", vector_to_json(q)}};
    } else if (req.command == "certify") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      const BoundKind kind =
          req.bound_kind == "prop68" ? BoundKind::kRankProjection : BoundKind::kWeakNilpotentDim;
      Realization r = req.inputs.size() > (req.fixture ? 0u : 1u)
                          ? cli_detail::load_realization(req, m, req.fixture ? 0 : 1)
                          : realize_nilpotent(m, rng, req.bound, req.retries);
      if (!r.verified) {
        const RealizationCheck check = is_realization(m, r);
        if (!check.realizes) {
          throw PreconditionError("verified realization", check.reason);
        }
        r.verified = true;
      }
      const RationalVector q = sample_outside_point(m, r.vectors, rng, req.bound, req.retries);
      const MinorCertificate cert = minor_rank_certificate(m, r, q, kind, rng);
      Json j = minor_certificate_to_json(cert);
      j["q"] = vector_to_json(q);
      out["result"] = j;
      pass = cert.pass;
    } else if (req.command == "gm") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      const GmResult gm = generate_gm(m, req.depth);
      Json polys = Json::array();
      for (const auto& p : gm.polynomials) polys.push_back(bracket_polynomial_to_json(p));
      out["result"] = Json{{"polynomials", polys},
                           {"count", static_cast<int>(gm.polynomials.size())},
                           {"stabilized", gm.stabilized},
                           {"depth_reached", gm.depth_reached}};
    } else if (req.command == "check-realization") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      const Realization r = cli_detail::load_realization(req, m, req.fixture ? 0 : 1);
      const RealizationCheck check = is_realization(m, r);
      const CircuitVarietyResult cv = in_circuit_variety(m, r.vectors);
      Json j{{"realizes", check.realizes}, {"in_circuit_variety", cv.member}};
      if (!check.realizes) j["reason"] = check.reason;
      if (check.discrepancy) j["discrepancy"] = set_to_json(*check.discrepancy);
      out["result"] = j;
      pass = check.realizes;
    } else if (req.command == "lift-sample") {
      const Matroid m = cli_detail::load_matroid(req);
      out["matroid"] = m.name();
      const int n = m.rank();
      VectorAssignment degenerate;
      RationalVector q;
      if (req.inputs.size() > (req.fixture ? 0u : 1u)) {
        const Json j = cli_detail::load_json_file(req.inputs[req.fixture ? 0 : 1]);
        if (!j.contains("vectors") || !j.contains("q")) {
          throw InputError("lift-sample input needs 'vectors' and 'q'");
        }
        degenerate = assignment_from_json(j.at("vectors"));
        q = vector_from_json(j.at("q"));
      } else {
        // Sample a generic rank n-1 collection inside a random hyperplane.
        const RationalSubspace h =
            random_subspace(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1), rng,
                            req.bound, req.retries);
        for (Elem e = 1; e <= m.ground_size(); ++e) {
          degenerate[e] =
              random_point_in_subspace_avoiding(h, {}, rng, req.bound, req.retries);
        }
        q = random_vector_avoiding(static_cast<std::size_t>(n), {h}, rng, req.bound,
                                   req.retries);
      }
      const auto lift = sample_lift(m, degenerate, q, rng);
      Json j;
      j["q"] = vector_to_json(q);
      j["degenerate"] = assignment_to_json(degenerate);
      if (lift) {
        Json coeffs = Json::object();
        for (const auto& [e, z] : lift->coefficients) {
          coeffs[std::to_string(e)] = rational_to_string(z);
        }
        j["lift"] = Json{{"coefficients", coeffs}, {"vectors", assignment_to_json(lift->lifted)}};
        j["found"] = true;
      } else {
        j["found"] = false;
        pass = false;
      }
      out["result"] = j;
    } else {
      throw InputError("unknown command '" + req.command + "'");
    }
  } catch (const InputError& e) {
    out["error"] = e.what();
    rep.exit_code = 2;
    return rep;
  } catch (const PreconditionError& e) {
    out["error"] = e.what();
    out["failed_precondition"] = e.precondition();
    rep.exit_code = 1;
    return rep;
  } catch (const GenericityError& e) {
    out["error"] = e.what();
    rep.exit_code = 1;
    return rep;
  }
  out["pass"] = pass;
  rep.exit_code = pass ? 0 : 1;
  return rep;
}

/// Human-readable rendering; the JSON form is the compatibility surface.
inline std::string render_text(const Report& rep) {
  std::ostringstream os;
  const Json& j = rep.json;
  os << "command: " << j.value("command", std::string()) << "\n";
  if (j.contains("matroid") && j["matroid"].is_string() && !j["matroid"].get<std::string>().empty()) {
    os << "matroid: " << j["matroid"].get<std::string>() << "\n";
  }
  os << "seed: " << j.value("seed", 0ULL) << "\n";
  if (j.contains("error")) {
    os << "error: " << j["error"].get<std::string>() << "\n";
  } else {
    os << "pass: " << (j.value("pass", false) ? "yes" : "no") << "\n";
    os << "result: " << j["result"].dump(2) << "\n";
  }
  return os.str();
}

}  // namespace matrovar
