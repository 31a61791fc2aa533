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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "matrovar/cli.hpp"

namespace {

using namespace matrovar;

CommandRequest fixture_request(const std::string& command, const std::string& fixture) {
  CommandRequest req;
  req.command = command;
  req.fixture = fixture;
  req.seed = 7;
  return req;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/matrovar_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

TEST_CASE("dim command payload matches the certificate") {
  const Report rep = run(fixture_request("dim", "nr11"));
  REQUIRE(rep.exit_code == 0);
  CHECK(rep.json["result"]["dim"] == 5);
  CHECK(rep.json["result"]["constants"] == Json::array({1, 2}));
  CHECK(rep.json["result"]["terminal_rank"] == 2);
}

TEST_CASE("classify fano") {
  const Report rep = run(fixture_request("classify", "fano7"));
  REQUIRE(rep.exit_code == 0);
  CHECK(rep.json["result"]["solvable"] == false);
  CHECK(rep.json["result"]["nilpotent"] == false);
  CHECK(rep.json["result"]["forest"] == false);
}

TEST_CASE("validate: nested circuits exit with code 2") {
  const std::string path = write_temp(
      "nested.json",
      R"({"ground_set":3,"rank":2,"presentation":{"kind":"circuits","sets":[[1,2],[1,2,3]]}})");
  CommandRequest req;
  req.command = "validate";
  req.inputs = {path};
  const Report rep = run(req);
  CHECK(rep.exit_code == 2);
  CHECK(rep.json.contains("error"));
  std::remove(path.c_str());
}

TEST_CASE("validate accepts the documented schema and both presentations") {
  const std::string path = write_temp(
      "tcl.json",
      R"({"name":"tcl","ground_set":7,"rank":3,
          "presentation":{"kind":"hyperplanes","sets":[[1,2,7],[3,4,7],[5,6,7]]}})");
  CommandRequest req;
  req.command = "validate";
  req.inputs = {path};
  const Report rep = run(req);
  REQUIRE(rep.exit_code == 0);
  CHECK(rep.json["result"]["valid"] == true);
  CHECK(rep.json["result"]["rank"] == 3);
  std::remove(path.c_str());
}

TEST_CASE("malformed JSON exits with code 2 and a location message") {
  const std::string path = write_temp("garbage.json", "{not json");
  CommandRequest req;
  req.command = "validate";
  req.inputs = {path};
  const Report rep = run(req);
  CHECK(rep.exit_code == 2);
  CHECK(rep.json["error"].get<std::string>().find("malformed JSON") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("precondition failures exit with code 1 and name the precondition") {
  const Report rep = run(fixture_request("realize", "fano7"));
  CHECK(rep.exit_code == 1);
  CHECK(rep.json["failed_precondition"] == "nilpotent");
  const Report dim = run(fixture_request("dim", "fano7"));
  CHECK(dim.exit_code == 1);
  CHECK(dim.json["failed_precondition"] == "weak-nilpotent");
}

TEST_CASE("reports are byte-identical across runs with the same seed") {
  for (const char* cmd : {"dim", "chain", "classify", "report", "realize", "certify"}) {
    const Report a = run(fixture_request(cmd, "nr11"));
    const Report b = run(fixture_request(cmd, "nr11"));
    CHECK(a.json.dump() == b.json.dump());
    CHECK(a.exit_code == b.exit_code);
  }
  // Different seeds can change randomized payloads but never the mathematics.
  CommandRequest req = fixture_request("liftdim", "nr11");
  req.seed = 1;
  const Report a = run(req);
  req.seed = 2;
  const Report b = run(req);
  CHECK(a.json["result"]["lifting_dimension"] == b.json["result"]["lifting_dimension"]);
}

TEST_CASE("CLI dispatch agrees with direct library calls") {
  SECTION("chain") {
    const Report rep = run(fixture_request("chain", "nr11"));
    const ChainResult direct = nilpotent_chain(fixture_by_name("nr11").matroid);
    CHECK(rep.json["result"]["length"] == direct.length);
    CHECK(rep.json["result"]["terminated_empty"] == direct.terminated_empty);
    CHECK(rep.json["result"]["chain"].size() == direct.chain.size());
  }
  SECTION("report") {
    const Report rep = run(fixture_request("report", "je9"));
    const ConfigReport direct = config_report(fixture_by_name("je9").matroid);
    CHECK(rep.json["result"] == config_report_to_json(direct));
  }
  SECTION("liftmat") {
    const Report rep = run(fixture_request("liftmat", "tcl7"));
    const Json direct =
        liftability_matrix_to_json(liftability_matrix(fixture_by_name("tcl7").matroid));
    CHECK(rep.json["result"] == direct);
  }
  SECTION("realize with an equal seed") {
    CommandRequest req = fixture_request("realize", "je9");
    req.seed = 5;
    const Report rep = run(req);
    Rng rng(5);
    const Realization direct =
        realize_nilpotent(fixture_by_name("je9").matroid, rng, req.bound, req.retries);
    CHECK(rep.json["result"] == realization_to_json(direct));
  }
  SECTION("gm") {
    CommandRequest req = fixture_request("gm", "tcl7");
    req.depth = 1;
    const Report rep = run(req);
    const GmResult direct = generate_gm(fixture_by_name("tcl7").matroid, 1);
    CHECK(rep.json["result"]["count"] == static_cast<int>(direct.polynomials.size()));
  }
}

TEST_CASE("fixtures command lists valid matroids") {
  CommandRequest req;
  req.command = "fixtures";
  const Report rep = run(req);
  REQUIRE(rep.exit_code == 0);
  bool has_nr11 = false, has_kvt7 = false, has_u35 = false;
  for (const auto& f : rep.json["result"]) {
    const Matroid m = matroid_from_json(f["matroid"]);
    if (f["name"] == "nr11") {
      has_nr11 = true;
      CHECK(m.rank() == 4);
      CHECK(m.is_paving());
    }
    if (f["name"] == "kvt7") {
      has_kvt7 = true;
      CHECK(is_special(m).special);
      CHECK(config_report(m).p_points == 0);
    }
    if (f["name"] == "u_3_5") {
      has_u35 = true;
      CHECK(subspace_classes(m).empty());
    }
  }
  CHECK(has_nr11);
  CHECK(has_kvt7);
  CHECK(has_u35);
}

TEST_CASE("check-realization round-trip through JSON files") {
  Rng rng(8);
  const Matroid& je9 = fixture_by_name("je9").matroid;
  const Realization r = realize_nilpotent(je9, rng);
  const std::string mpath = write_temp("je9.json", matroid_to_json(je9).dump());
  const std::string rpath = write_temp("je9_real.json", realization_to_json(r).dump());
  CommandRequest req;
  req.command = "check-realization";
  req.inputs = {mpath, rpath};
  const Report rep = run(req);
  CHECK(rep.exit_code == 0);
  CHECK(rep.json["result"]["realizes"] == true);
  CHECK(rep.json["result"]["in_circuit_variety"] == true);

  // Tampering with one vector must flip the verdict.
  Json bad = realization_to_json(r);
  bad["vectors"]["1"] = Json::array({"1", "0", "0"});
  bad["vectors"]["2"] = Json::array({"0", "1", "0"});
  bad["vectors"]["7"] = Json::array({"0", "0", "1"});
  const std::string bpath = write_temp("je9_bad.json", bad.dump());
  req.inputs = {mpath, bpath};
  const Report rep2 = run(req);
  CHECK(rep2.exit_code == 1);
  CHECK(rep2.json["result"]["realizes"] == false);
  std::remove(mpath.c_str());
  std::remove(rpath.c_str());
  std::remove(bpath.c_str());
}

TEST_CASE("rational serialization round-trips through vectors") {
  const RationalVector v = {Rational(22, 7), Rational(-3), Rational(0)};
  CHECK(vector_from_json(vector_to_json(v)) == v);
  CHECK(vector_from_json(Json::array({1, -2})) == RationalVector{Rational(1), Rational(-2)});
}

#ifdef MATROVAR_CLI_PATH
TEST_CASE("the built binary honours exit codes and emits stable JSON") {
  const std::string bin = MATROVAR_CLI_PATH;
  auto run_cli = [&](const std::string& args) {
    const std::string out_path = "/tmp/matrovar_cli_out.json";
    const int status = std::system((bin + " " + args + " > " + out_path + " 2>/dev/null").c_str());
    std::ifstream in(out_path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::remove(out_path.c_str());
    return std::make_pair(WEXITSTATUS(status), content);
  };
  const auto [code, out] = run_cli("dim --fixture nr11 --seed 3");
  CHECK(code == 0);
  const Json j = Json::parse(out);
  CHECK(j["result"]["dim"] == 5);

  const auto [code2, out2] = run_cli("dim --fixture nr11 --seed 3");
  CHECK(out2 == out);  // byte-identical rerun

  const auto [code3, out3] = run_cli("realize --fixture fano7");
  CHECK(code3 == 1);
  (void)out3;

  const auto [code4, out4] = run_cli("classify --fixture quad6");
  CHECK(code4 == 0);
  CHECK(Json::parse(out4)["result"]["solvable"] == true);

  // Usage errors: unknown fixture.
  const auto [code5, out5] = run_cli("validate --fixture nosuch");
  CHECK(code5 == 2);
  (void)out5;

  // The ground cap honours MATROVAR_MAX_GROUND.
  const std::string big = write_temp(
      "big.json",
      R"({"ground_set":22,"rank":22,"presentation":{"kind":"circuits","sets":[]}})");
  const auto [code6, out6] = run_cli("validate " + big);
  CHECK(code6 == 2);
  const int status7 = std::system(
      ("MATROVAR_MAX_GROUND=25 " + bin + " validate " + big + " > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status7) == 0);
  std::remove(big.c_str());
}
#endif

}  // namespace
