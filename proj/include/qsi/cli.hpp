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

#ifndef QSI_CLI_HPP_
#define QSI_CLI_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qsi/oracle.hpp"
#include "qsi/solver.hpp"

namespace qsi {

/// Instance generation: a seeded random graph, optionally with a pattern
/// planted so the bundled instance is solvable by the ansatz.
struct GenOptions {
  int n = 8;
  double edge_probability = 0.5;
  uint64_t seed = 0;
  std::string out;  // file for a plain graph, directory with --plant
  bool plant = false;
  int pattern_order = 0;
  std::string topology = "circular";
};
int cmd_gen(const GenOptions& opts, std::ostream& log);

struct SolveOptions {
  /// When set, the manifest file drives everything below.
  std::string manifest_path;

  std::string source_path;
  std::string pattern_path;
  std::string topology = "circular";
  std::string mode = "search";
  int runs = 100;
  SolverConfig solver;
  bool seed_set = false;
  std::string out_dir;
};
int cmd_solve(const SolveOptions& opts, std::ostream& log);

struct VerifyOptions {
  std::string source_path;
  std::string pattern_path;
  std::string solutions_path;
  bool check_census = false;
  uint64_t census_cap = kEnumerationCap;
};
/// Exit code 0 only if every solution in the file is a zero-loss match.
int cmd_verify(const VerifyOptions& opts, std::ostream& log);

struct ResourcesOptions {
  std::vector<int> sizes;
  std::string out;  // empty writes to the log stream
};
int cmd_resources(const ResourcesOptions& opts, std::ostream& log);

/// Qubit-budget table in CSV form, one row per problem size.
std::string resources_csv(const std::vector<int>& sizes);

}  // namespace qsi

#endif  // QSI_CLI_HPP_
