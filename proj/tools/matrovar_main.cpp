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

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "matrovar/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "matrovar: exact-arithmetic matroid invariants, classifications, realizations and "
      "certificates"};
  app.require_subcommand(1);

  matrovar::CommandRequest req;
  const std::vector<std::string> commands = {
      "validate",  "report",  "chain",   "classify",          "dim",
      "realize",   "stable-realize",     "liftmat", "liftdim", "certify",
      "gm",        "check-realization",  "lift-sample",        "fixtures"};
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("inputs", req.inputs, "input JSON file(s)");
    sub->add_option("--fixture", req.fixture, "use a built-in fixture instead of a file");
    sub->add_option("--seed", req.seed, "random seed (default 0)");
    sub->add_option("--bound", req.bound, "sampling bound (default 1000)");
    sub->add_option("--retries", req.retries, "sampling retries (default 64)");
    sub->add_option("--depth", req.depth, "substitution depth for gm (default 3)");
    sub->add_option("--format", req.format, "json or text (default json)")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--mode", req.mode, "nilpotent or solvable (chain)")
        ->check(CLI::IsMember({"nilpotent", "solvable"}));
    sub->add_option("--bound-kind", req.bound_kind, "thm25 or prop68 (certify)")
        ->check(CLI::IsMember({"thm25", "prop68"}));
    sub->add_option("--max-ground", req.max_ground,
                    "ground-set cap (overrides MATROVAR_MAX_GROUND)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  req.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  const matrovar::Report rep = matrovar::run(req);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  if (req.format == "text") {
    std::cout << matrovar::render_text(rep);
    std::cout << "elapsed_ms: " << elapsed.count() << "\n";
  } else {
    // The JSON report is byte-stable for identical inputs and seed; timing
    // goes to stderr only.
    std::cout << rep.json.dump(2) << "\n";
    std::cerr << "elapsed_ms: " << elapsed.count() << "\n";
  }
  return rep.exit_code;
}
