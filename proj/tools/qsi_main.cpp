// Copyright 2026 The qsi Authors
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

#include <iostream>

#include <CLI11.hpp>

#include "qsi/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"variational (sub)graph matching on a statevector simulator"};
  app.require_subcommand(1);

  qsi::GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded random instance");
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--p", gen.edge_probability, "edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "generator seed")->required();
  gen_cmd->add_option("--out", gen.out, "output file (directory with --plant)")
      ->required();
  gen_cmd->add_flag("--plant", gen.plant,
                    "also cut an ansatz-reachable pattern out of the source");
  gen_cmd->add_option("--nb", gen.pattern_order,
                      "pattern vertex count (power of two, with --plant)");
  gen_cmd->add_option("--topology", gen.topology, "ansatz topology kind");

  qsi::SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run the variational solver");
  solve_cmd->add_option("--manifest", solve.manifest_path,
                        "experiment manifest (overrides the other flags)");
  solve_cmd->add_option("--source", solve.source_path, "source graph file");
  solve_cmd->add_option("--pattern", solve.pattern_path, "pattern graph file");
  solve_cmd->add_option("--topology", solve.topology, "ansatz topology kind");
  solve_cmd->add_option("--mode", solve.mode, "search or convergence");
  solve_cmd->add_option("--runs", solve.runs, "independent optimization runs");
  auto* seed_opt =
      solve_cmd->add_option("--seed", solve.solver.seed, "base seed (mandatory)");
  solve_cmd->add_option("--shots", solve.solver.shots,
                        "measurement shots per evaluation, 0 = exact");
  solve_cmd->add_option("--steps", solve.solver.max_steps, "SGD step budget");
  solve_cmd->add_option("--samples", solve.solver.samples_per_step,
                        "rounded samples per step");
  solve_cmd->add_option("--eta", solve.solver.learning_rate, "learning rate");
  solve_cmd->add_option("--momentum", solve.solver.momentum, "momentum factor");
  solve_cmd->add_option("--epsilon", solve.solver.fd_epsilon,
                        "finite-difference step");
  solve_cmd->add_flag("--forward-diff", solve.solver.forward_difference,
                      "use forward instead of central differences");
  solve_cmd->add_option("--out", solve.out_dir, "output directory");

  qsi::VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "re-check a solutions file classically");
  verify_cmd->add_option("--source", verify.source_path, "source graph file")
      ->required();
  verify_cmd->add_option("--pattern", verify.pattern_path, "pattern graph file")
      ->required();
  verify_cmd->add_option("--solutions", verify.solutions_path, "solutions JSON")
      ->required();
  verify_cmd->add_flag("--census", verify.check_census,
                       "cross-check against exhaustive enumeration");
  verify_cmd->add_option("--cap", verify.census_cap, "enumeration candidate cap");

  qsi::ResourcesOptions resources;
  CLI::App* resources_cmd =
      app.add_subcommand("resources", "qubit budgets for given problem sizes");
  resources_cmd->add_option("--n", resources.sizes, "problem sizes")->required();
  resources_cmd->add_option("--out", resources.out, "output CSV (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return qsi::cmd_gen(gen, std::cout);
    if (*solve_cmd) {
      solve.seed_set = seed_opt->count() > 0;
      return qsi::cmd_solve(solve, std::cout);
    }
    if (*verify_cmd) return qsi::cmd_verify(verify, std::cout);
    if (*resources_cmd) return qsi::cmd_resources(resources, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
