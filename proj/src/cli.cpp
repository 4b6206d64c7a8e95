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

#include "qsi/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qsi/io.hpp"

namespace qsi {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json solver_to_json(const SolverConfig& c) {
  return json{{"eta", c.learning_rate},
              {"momentum", c.momentum},
              {"epsilon", c.fd_epsilon},
              {"steps", c.max_steps},
              {"samples", c.samples_per_step},
              {"shots", c.shots},
              {"seed", c.seed},
              {"forward_difference", c.forward_difference}};
}

SolverConfig solver_from_json(const json& j) {
  SolverConfig c;
  if (!j.contains("seed")) {
    throw std::invalid_argument("solver block must set \"seed\"");
  }
  c.seed = j.at("seed").get<uint64_t>();
  c.learning_rate = j.value("eta", c.learning_rate);
  c.momentum = j.value("momentum", c.momentum);
  c.fd_epsilon = j.value("epsilon", c.fd_epsilon);
  c.max_steps = j.value("steps", c.max_steps);
  c.samples_per_step = j.value("samples", c.samples_per_step);
  c.shots = j.value("shots", c.shots);
  c.forward_difference = j.value("forward_difference", false);
  c.validate();
  return c;
}

json manifest_from_options(const SolveOptions& o) {
  if (!o.seed_set) throw std::invalid_argument("--seed is mandatory");
  if (o.source_path.empty() || o.pattern_path.empty()) {
    throw std::invalid_argument("--source and --pattern are required without --manifest");
  }
  if (o.out_dir.empty()) throw std::invalid_argument("--out is required");
  return json{{"source", o.source_path}, {"pattern", o.pattern_path},
              {"topology", o.topology},  {"mode", o.mode},
              {"runs", o.runs},          {"solver", solver_to_json(o.solver)},
              {"out", o.out_dir}};
}

Graph load_graph_reference(const json& ref, const char* what) {
  if (ref.is_string()) {
    const std::string path = ref.get<std::string>();
    if (!fs::exists(path)) {
      throw std::invalid_argument(std::string(what) + " file does not exist: " + path);
    }
    return read_graph(path);
  }
  if (ref.is_object() && ref.contains("n") && ref.contains("p") && ref.contains("seed")) {
    return erdos_renyi(ref.at("n").get<int>(), ref.at("p").get<double>(),
                       ref.at("seed").get<uint64_t>());
  }
  throw std::invalid_argument(std::string(what) +
                              " must be a path or a generator {n, p, seed}");
}

struct ResolvedInstance {
  AdjacencyMatrix source;
  AdjacencyMatrix pattern;
  AnsatzTopology topology;
  json planted;  // null unless the pattern was planted
};

ResolvedInstance resolve_instance(const json& manifest) {
  const Graph source_graph = load_graph_reference(manifest.at("source"), "source");
  AdjacencyMatrix source = pad_to_power_of_two(source_graph);

  const std::string topology_kind = manifest.at("topology").get<std::string>();
  if (topology_kind != "circular") {
    throw std::invalid_argument("unsupported topology: " + topology_kind);
  }
  AnsatzTopology topology = circular_topology(source.log2_order());

  const json& pattern_ref = manifest.at("pattern");
  if (pattern_ref.is_object() && pattern_ref.contains("planted")) {
    const json& plant = pattern_ref.at("planted");
    const PlantedInstance planted =
        plant_pattern(source, topology, plant.at("nb").get<int>(),
                      plant.at("seed").get<uint64_t>());
    json sidecar{{"g", planted.g}, {"planted_image", planted.planted_image.image}};
    return {std::move(source), planted.pattern, std::move(topology),
            std::move(sidecar)};
  }
  AdjacencyMatrix pattern =
      pad_to_power_of_two(load_graph_reference(pattern_ref, "pattern"));
  return {std::move(source), std::move(pattern), std::move(topology), json()};
}

std::string file_header(const std::string& hash, uint64_t seed) {
  return "# manifest_hash=" + hash + "\n# seed=" + std::to_string(seed) + "\n";
}

std::string trace_csv(const RunResult& r, const std::string& hash,
                      uint64_t base_seed, int run_index) {
  std::string out = file_header(hash, base_seed);
  out += "# run=" + std::to_string(run_index) +
         " run_seed=" + std::to_string(derive_seed(base_seed, run_index)) + "\n";
  out += "step,quantum_loss,best_classical_loss\n";
  for (size_t i = 0; i < r.quantum_loss_trace.size(); ++i) {
    out += std::to_string(i + 1) + "," + format_double(r.quantum_loss_trace[i]) +
           "," + std::to_string(r.best_classical_loss_trace[i]) + "\n";
  }
  return out;
}

std::string summary_csv(const ResolvedInstance& inst, const BatchStatistics& stats,
                        const std::string& hash, const SolverConfig& config) {
  std::string out = file_header(hash, config.seed);
  out += "source_order,pattern_order,search_space,unique_solutions,parameters,"
         "qubits,convergent_percent,avg_steps_convergent,max_steps_convergent\n";
  out += std::to_string(inst.source.order()) + "," +
         std::to_string(inst.pattern.order()) + "," +
         search_space_size(inst.source.order(), inst.pattern.order()).str() + "," +
         std::to_string(stats.unique_image_subsets) + "," +
         std::to_string(inst.topology.parameter_count()) + "," +
         std::to_string(2 * inst.source.log2_order() + 1) + "," +
         format_double(100.0 * stats.convergent_fraction) + "," +
         format_double(stats.average_steps_to_convergence) + "," +
         std::to_string(stats.max_steps_to_convergence) + "\n";
  return out;
}

std::string run_file_name(int run_index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "run_%03d_trace.csv", run_index);
  return buf;
}

}  // namespace

int cmd_gen(const GenOptions& opts, std::ostream& log) {
  if (opts.out.empty()) throw std::invalid_argument("--out is required");
  const Graph g = erdos_renyi(opts.n, opts.edge_probability, opts.seed);
  if (!opts.plant) {
    write_graph(g, opts.out);
    log << "wrote " << opts.out << " (" << g.num_vertices << " vertices, "
        << g.edges.size() << " edges)\n";
    return 0;
  }

  if (opts.topology != "circular") {
    throw std::invalid_argument("unsupported topology: " + opts.topology);
  }
  const AdjacencyMatrix source = pad_to_power_of_two(g);
  const AnsatzTopology topology = circular_topology(source.log2_order());
  const PlantedInstance planted =
      plant_pattern(source, topology, opts.pattern_order, derive_seed(opts.seed, 1));

  fs::create_directories(opts.out);
  write_graph(g, opts.out + "/source.json");
  write_graph(to_graph(planted.pattern), opts.out + "/pattern.json");
  const json sidecar{{"seed", opts.seed},
                     {"topology", json::parse(topology_to_json(topology))},
                     {"g", planted.g},
                     {"planted_image", planted.planted_image.image}};
  write_text_file(opts.out + "/planted.json", sidecar.dump(2) + "\n");
  log << "wrote planted instance under " << opts.out << " (source "
      << g.num_vertices << " vertices, pattern " << opts.pattern_order
      << " vertices)\n";
  return 0;
}

int cmd_solve(const SolveOptions& opts, std::ostream& log) {
  json manifest;
  if (opts.manifest_path.empty()) {
    manifest = manifest_from_options(opts);
  } else {
    manifest = json::parse(read_text_file(opts.manifest_path));
    for (const char* field : {"source", "pattern", "solver", "out"}) {
      if (!manifest.contains(field)) {
        throw std::invalid_argument(std::string("manifest is missing \"") + field + "\"");
      }
    }
  }

  const SolverConfig config = solver_from_json(manifest.at("solver"));
  const std::string mode_name = manifest.value("mode", "search");
  BatchMode mode;
  if (mode_name == "search") {
    mode = BatchMode::Search;
  } else if (mode_name == "convergence") {
    mode = BatchMode::Convergence;
  } else {
    throw std::invalid_argument("mode must be \"search\" or \"convergence\"");
  }
  const int runs = manifest.value("runs", 1);
  const std::string out_dir = manifest.at("out").get<std::string>();

  // Canonical form: exactly the recognized fields, keys sorted by the JSON
  // library, so logically identical manifests hash identically.
  const json canonical{{"source", manifest.at("source")},
                       {"pattern", manifest.at("pattern")},
                       {"topology", manifest.value("topology", "circular")},
                       {"mode", mode_name},
                       {"runs", runs},
                       {"solver", solver_to_json(config)},
                       {"out", out_dir}};
  const std::string hash = fnv1a_hex(canonical.dump());

  ResolvedInstance inst = resolve_instance(canonical);
  const BatchStatistics stats =
      run_batch(inst.source, inst.pattern, inst.topology, config, runs, mode);

  fs::create_directories(out_dir);
  json manifest_out = canonical;
  manifest_out["manifest_hash"] = hash;
  write_text_file(out_dir + "/manifest.json", manifest_out.dump(2) + "\n");
  if (!inst.planted.is_null()) {
    json planted_out = inst.planted;
    planted_out["manifest_hash"] = hash;
    planted_out["seed"] = config.seed;
    write_text_file(out_dir + "/planted.json", planted_out.dump(2) + "\n");
  }

  for (int r = 0; r < runs; ++r) {
    write_text_file(out_dir + "/" + run_file_name(r),
                    trace_csv(stats.run_results[r], hash, config.seed, r));
  }

  json solutions = json::array();
  for (const PartialPermutation& w : stats.solutions) solutions.push_back(w.image);
  const json solutions_out{{"manifest_hash", hash},
                           {"seed", config.seed},
                           {"source_order", inst.source.order()},
                           {"pattern_order", inst.pattern.order()},
                           {"solutions", solutions}};
  write_text_file(out_dir + "/solutions.json", solutions_out.dump(2) + "\n");
  write_text_file(out_dir + "/summary.csv", summary_csv(inst, stats, hash, config));

  log << "runs=" << runs << " convergent=" << stats.convergent_runs
      << " unique_solutions=" << stats.unique_image_subsets << " out=" << out_dir
      << "\n";
  return 0;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& log) {
  const AdjacencyMatrix source = pad_to_power_of_two(read_graph(opts.source_path));
  const AdjacencyMatrix pattern = pad_to_power_of_two(read_graph(opts.pattern_path));
  const json file = json::parse(read_text_file(opts.solutions_path));

  int invalid = 0;
  std::vector<PartialPermutation> valid;
  size_t index = 0;
  for (const auto& entry : file.at("solutions")) {
    PartialPermutation w{source.order(), entry.get<std::vector<int>>()};
    const std::string label = "solution #" + std::to_string(index++);
    if (static_cast<int>(w.image.size()) != pattern.order()) {
      log << "INVALID " << label << ": image length "
          << w.image.size() << " != pattern order " << pattern.order() << "\n";
      ++invalid;
    } else if (!w.is_valid()) {
      log << "INVALID " << label << ": image is not an injective map into the source\n";
      ++invalid;
    } else if (const int loss = partial_loss(source, pattern, w); loss != 0) {
      log << "INVALID " << label << ": " << loss << " mismatched entries\n";
      ++invalid;
    } else {
      valid.push_back(std::move(w));
    }
  }

  if (opts.check_census) {
    const auto census = enumerate_matches(source, pattern, opts.census_cap);
    if (!census) {
      log << "census: refused, search space "
          << search_space_size(source.order(), pattern.order()).str()
          << " exceeds cap " << opts.census_cap << "\n";
    } else {
      const std::set<PartialPermutation> known(census->matches.begin(),
                                               census->matches.end());
      for (const PartialPermutation& w : valid) {
        if (!known.count(w)) {
          log << "INVALID census mismatch: verified solution missing from census\n";
          ++invalid;
        }
      }
      log << "census: total=" << census->total_matches
          << " unique=" << census->unique_solutions << "\n";
    }
  }

  if (invalid > 0) {
    log << "FAIL: " << invalid << " invalid entries\n";
    return 1;
  }
  log << "OK: " << valid.size() << " solutions verified\n";
  return 0;
}

std::string resources_csv(const std::vector<int>& sizes) {
  std::string out = "n,this_method,qubo_full,compressed_min,compressed_max\n";
  for (int n : sizes) {
    const QubitRequirements q = qubit_requirements(n);
    out += std::to_string(n) + "," + std::to_string(q.this_method) + "," +
           std::to_string(q.qubo_full) + "," + std::to_string(q.compressed_min) +
           "," + std::to_string(q.compressed_max) + "\n";
  }
  return out;
}

int cmd_resources(const ResourcesOptions& opts, std::ostream& log) {
  if (opts.sizes.empty()) {
    throw std::invalid_argument("at least one --n value is required");
  }
  const std::string csv = resources_csv(opts.sizes);
  if (opts.out.empty()) {
    log << csv;
  } else {
    write_text_file(opts.out, csv);
    log << "wrote " << opts.out << "\n";
  }
  return 0;
}

}  // namespace qsi
