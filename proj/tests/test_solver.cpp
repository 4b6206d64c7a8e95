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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "qsi/oracle.hpp"
#include "qsi/solver.hpp"

using namespace qsi;

namespace {

constexpr double kPi = std::numbers::pi;

AdjacencyMatrix benchmark_graph() {
  AdjacencyMatrix a(4);
  a.set_edge(0, 1, true);
  a.set_edge(0, 3, true);
  a.set_edge(1, 3, true);
  a.set_edge(1, 2, true);
  return a;
}

AdjacencyMatrix square_graph() {
  AdjacencyMatrix a(4);
  a.set_edge(0, 1, true);
  a.set_edge(1, 2, true);
  a.set_edge(2, 3, true);
  a.set_edge(3, 0, true);
  return a;
}

// Width-1 register driven by a single one-qubit primitive.
AnsatzTopology tiny_topology() {
  AnsatzTopology t;
  t.register_width = 1;
  t.primitives = {PrimitiveSpec::non_entangling(0)};
  return t;
}

SolverConfig exact_config(uint64_t seed = 0) {
  SolverConfig c;
  c.shots = 0;
  c.seed = seed;
  return c;
}


LossCircuitSpec make_spec(AdjacencyMatrix source, AdjacencyMatrix pattern,
                          AnsatzTopology topology, LossMode mode) {
  return LossCircuitSpec{std::move(source), std::move(pattern),
                         std::move(topology), mode};
}

std::vector<double> angles_of_bits(const std::vector<uint8_t>& g) {
  std::vector<double> theta(g.size(), 0.0);
  for (size_t i = 0; i < g.size(); ++i) theta[i] = g[i] ? kPi : 0.0;
  return theta;
}

std::vector<uint8_t> random_bits(int n, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<uint8_t> g(n);
  for (auto& b : g) b = static_cast<uint8_t>(rng.next_u64() & 1);
  return g;
}

}  // namespace

TEST_CASE("loss circuit layout and gate counts") {
  AdjacencyMatrix small_pattern(2);
  small_pattern.set_edge(0, 1, true);
  LossCircuitSpec spec =
      make_spec(pad_to_power_of_two(erdos_renyi(4, 0.5, 3)), small_pattern,
                circular_topology(2), LossMode::SubgraphIsomorphism);
  const size_t n = spec.topology.primitives.size();

  std::vector<double> theta(spec.topology.parameter_count(), 0.3);
  const GateProgram subgraph = build_circuit(spec, theta);
  // H layer, adjoint on both registers, diagonal, ansatz on both registers,
  // diagonal, H layer; every primitive expands to three gates.
  CHECK(subgraph.size() == 2 * (2 * 3 * n) + 4);
  // Pattern order 2 puts Hadamards on one low qubit per register + control.
  const auto& first = std::get<HadamardLayer>(subgraph.front());
  CHECK(first.qubits == std::vector<int>{0, 2, 4});
  CHECK(std::get<HadamardLayer>(subgraph.back()).qubits == first.qubits);

  LossCircuitSpec gi = spec;
  gi.pattern = gi.source;
  gi.mode = LossMode::GraphIsomorphism;
  const GateProgram full = build_circuit(gi, theta);
  CHECK(full.size() == 2 * 3 * n + 4);
  CHECK(std::get<HadamardLayer>(full.front()).qubits ==
        std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("loss circuit validation") {
  LossCircuitSpec spec =
      make_spec(AdjacencyMatrix(4), AdjacencyMatrix(8), circular_topology(2),
                LossMode::SubgraphIsomorphism);
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // pattern too big

  spec.pattern = AdjacencyMatrix(2);
  spec.mode = LossMode::GraphIsomorphism;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // unequal orders

  spec.mode = LossMode::SubgraphIsomorphism;
  spec.topology = circular_topology(3);
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // width mismatch
}

TEST_CASE("two-vertex isomorphism has an exact cosine utility") {
  // Matching the single edge against itself with one one-qubit primitive:
  // the zero amplitude works out to (1 + e^{2 i theta}) / 2, so the utility
  // is |cos theta| and convergence rolls downhill to theta = 0 or pi.
  AdjacencyMatrix edge(2);
  edge.set_edge(0, 1, true);
  const LossCircuitSpec spec =
      make_spec(edge, edge, tiny_topology(), LossMode::GraphIsomorphism);
  spec.validate();
  const SolverConfig config = exact_config();

  for (double theta : {0.0, 0.3, 0.7, 1.1, kPi / 2, 2.0, 2.9, kPi}) {
    const std::vector<double> t{theta};
    CHECK(utility(spec, t, config) ==
          doctest::Approx(std::abs(std::cos(theta))).epsilon(1e-10));
  }

  // Central differences at the solver's own epsilon, checked against the
  // same difference quotient of the analytic utility.
  SplitMix64 rng(1);
  for (double theta : {0.3, 0.7, 1.1, 2.0, 2.9}) {
    const std::vector<double> t{theta};
    const auto grad = numerical_gradient(spec, t, config, rng);
    REQUIRE(grad.size() == 1);
    const double e = config.fd_epsilon;
    const double quotient =
        (std::abs(std::cos(theta + e)) - std::abs(std::cos(theta - e))) /
        (2 * e);
    CHECK(grad[0] == doctest::Approx(quotient).epsilon(1e-9));
    // And loosely against the true derivative away from the kink.
    const double truth = -std::sin(theta) * (std::cos(theta) < 0 ? -1.0 : 1.0);
    CHECK(std::abs(grad[0] - truth) < 2e-2);
  }
}

TEST_CASE("forward differences approximate the same gradient") {
  AdjacencyMatrix edge(2);
  edge.set_edge(0, 1, true);
  const LossCircuitSpec spec =
      make_spec(edge, edge, tiny_topology(), LossMode::GraphIsomorphism);
  SolverConfig config = exact_config();
  config.forward_difference = true;
  SplitMix64 rng(1);
  const std::vector<double> t{0.7};
  const auto grad = numerical_gradient(spec, t, config, rng);
  const double e = config.fd_epsilon;
  const double quotient =
      (std::abs(std::cos(0.7 + e)) - std::abs(std::cos(0.7))) / e;
  CHECK(grad[0] == doctest::Approx(quotient).epsilon(1e-9));
}

TEST_CASE("frozen utility of the benchmark pair at the identity angles") {
  const LossCircuitSpec spec =
      make_spec(benchmark_graph(), AdjacencyMatrix(4), circular_topology(2),
                LossMode::GraphIsomorphism);
  const std::vector<double> zero(spec.topology.parameter_count(), 0.0);
  // Zero-basis probability 1/4, so the utility is 1/2.
  CHECK(utility(spec, zero, exact_config()) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("integer angles reproduce the classical score") {
  SplitMix64 rng(4242);
  const AnsatzTopology topology = circular_topology(3);
  for (int trial = 0; trial < 6; ++trial) {
    const LossCircuitSpec spec = make_spec(
        pad_to_power_of_two(erdos_renyi(8, 0.5, rng.next_u64())),
        pad_to_power_of_two(erdos_renyi(4, 0.5, rng.next_u64())), topology,
        LossMode::SubgraphIsomorphism);
    const auto g = random_bits(topology.parameter_count(), rng.next_u64());
    const VertexPermutation p = classical_permutation(topology, g);
    const double expected =
        1.0 - static_cast<double>(partial_loss(spec.source, spec.pattern,
                                               to_partial(p, 4))) / 16.0;
    CHECK(utility(spec, angles_of_bits(g), exact_config()) ==
          doctest::Approx(expected).epsilon(1e-10));
    CHECK(utility(spec, angles_of_bits(g), exact_config()) ==
          doctest::Approx(closed_form_amplitude(spec.source, spec.pattern, p))
              .epsilon(1e-10));
  }
}

TEST_CASE("subgraph mode with equal orders equals isomorphism mode") {
  SplitMix64 rng(555);
  const LossCircuitSpec subgraph =
      make_spec(benchmark_graph(), square_graph(), circular_topology(2),
                LossMode::SubgraphIsomorphism);
  LossCircuitSpec iso = subgraph;
  iso.mode = LossMode::GraphIsomorphism;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> theta(subgraph.topology.parameter_count());
    for (double& t : theta) t = rng.next_double() * 2 * kPi;
    const double a = utility(subgraph, theta, exact_config());
    const double b = utility(iso, theta, exact_config());
    CHECK(a == doctest::Approx(b).epsilon(1e-10));
  }
}

TEST_CASE("momentum step unrolls as expected") {
  SolverConfig config;  // learning_rate 0.1, momentum 0.9
  std::vector<double> theta{1.0, 2.0};
  std::vector<double> velocity{0.0, 0.0};
  const std::vector<double> gradient{0.5, -1.0};
  sgd_step(theta, velocity, gradient, config);
  CHECK(theta[0] == doctest::Approx(1.0 - 0.05).epsilon(1e-15));
  CHECK(theta[1] == doctest::Approx(2.0 + 0.1).epsilon(1e-15));
  sgd_step(theta, velocity, gradient, config);
  // Constant gradient: cumulative displacement is lr * g * (1 + 1.9).
  CHECK(theta[0] == doctest::Approx(1.0 - 0.1 * 0.5 * 2.9).epsilon(1e-12));
  CHECK(theta[1] == doctest::Approx(2.0 + 0.1 * 1.0 * 2.9).epsilon(1e-12));
  CHECK(velocity[0] == doctest::Approx(0.95).epsilon(1e-12));
}

TEST_CASE("triangle wave and rounding probabilities") {
  CHECK(triangle_wave(0.0) == 0.0);
  CHECK(triangle_wave(1.0) == 1.0);
  CHECK(triangle_wave(0.5) == doctest::Approx(0.5));
  CHECK(triangle_wave(2.0) == doctest::Approx(0.0));
  CHECK(triangle_wave(2.5) == doctest::Approx(0.5));
  CHECK(triangle_wave(3.0) == doctest::Approx(1.0));
  CHECK(triangle_wave(-0.5) == doctest::Approx(0.5));
  CHECK(triangle_wave(-1.0) == doctest::Approx(1.0));
  CHECK(triangle_wave(-2.0) == doctest::Approx(0.0));
  CHECK(triangle_wave(7.25) == doctest::Approx(0.75));

  const std::vector<double> theta{0.0, kPi, kPi / 2, 3 * kPi / 2, -kPi / 2};
  const auto p = rounding_probabilities(theta);
  REQUIRE(p.size() == 5);
  CHECK(p[0] == doctest::Approx(0.0));
  CHECK(p[1] == doctest::Approx(1.0));
  CHECK(p[2] == doctest::Approx(0.5));
  CHECK(p[3] == doctest::Approx(0.5));
  CHECK(p[4] == doctest::Approx(0.5));
}

TEST_CASE("probabilistic rounding is deterministic at the wave extremes") {
  const std::vector<double> theta{0.0, kPi, 0.0, kPi};
  for (uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(probabilistic_round(theta, seed) ==
          std::vector<uint8_t>{0, 1, 0, 1});
  }
  // Same seed, same draw.
  const std::vector<double> mixed{0.4, 1.8, 2.6};
  CHECK(probabilistic_round(mixed, 7) == probabilistic_round(mixed, 7));
}

TEST_CASE("planted instances are solvable by construction") {
  const AdjacencyMatrix source = pad_to_power_of_two(erdos_renyi(8, 0.5, 11));
  const AnsatzTopology topology = circular_topology(3);
  const PlantedInstance planted = plant_pattern(source, topology, 4, 99);
  CHECK(planted.pattern.order() == 4);
  CHECK(planted.planted_image.source_order == 8);
  CHECK(partial_loss(source, planted.pattern, planted.planted_image) == 0);
  CHECK(static_cast<int>(planted.g.size()) == topology.parameter_count());

  // The pattern is the upper block of the relabelled source.
  const VertexPermutation p = classical_permutation(topology, planted.g);
  const AdjacencyMatrix relabelled = permute(source, p);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(planted.pattern.at(i, j) == relabelled.at(i, j));

  // Deterministic in the seed.
  const PlantedInstance again = plant_pattern(source, topology, 4, 99);
  CHECK(again.pattern == planted.pattern);
  CHECK(again.g == planted.g);
  CHECK(again.planted_image == planted.planted_image);
  const PlantedInstance other = plant_pattern(source, topology, 4, 100);
  CHECK((other.g != planted.g || other.pattern != planted.pattern));
}

TEST_CASE("single run converges on a tiny planted instance") {
  const AdjacencyMatrix source = benchmark_graph();
  const AnsatzTopology topology = circular_topology(2);
  const PlantedInstance planted = plant_pattern(source, topology, 2, 5);

  const LossCircuitSpec spec = make_spec(source, planted.pattern, topology,
                                         LossMode::SubgraphIsomorphism);
  const RunResult result = run_single(spec, exact_config(17));
  REQUIRE(result.converged);
  CHECK(result.steps_used >= 1);
  CHECK(result.steps_used <= 128);
  CHECK(result.quantum_loss_trace.size() ==
        static_cast<size_t>(result.steps_used));
  CHECK(result.best_classical_loss_trace.size() ==
        static_cast<size_t>(result.steps_used));
  CHECK(result.best_classical_loss_trace.back() == 0);
  REQUIRE_FALSE(result.solutions.empty());
  for (const auto& s : result.solutions) {
    CHECK(partial_loss(source, planted.pattern, s) == 0);
  }
  for (double loss : result.quantum_loss_trace) {
    CHECK(loss >= -1e-12);
    CHECK(loss <= 1.0 + 1e-12);
  }
  CHECK(result.final_theta.size() ==
        static_cast<size_t>(topology.parameter_count()));
}

TEST_CASE("a one-vertex pattern converges on the first step") {
  const LossCircuitSpec spec =
      make_spec(benchmark_graph(), AdjacencyMatrix(1), circular_topology(2),
                LossMode::SubgraphIsomorphism);
  const RunResult result = run_single(spec, exact_config(3));
  CHECK(result.converged);
  CHECK(result.steps_used == 1);
}

TEST_CASE("batches are deterministic and report original labels") {
  const AdjacencyMatrix source = square_graph();
  AdjacencyMatrix pattern(2);
  pattern.set_edge(0, 1, true);
  const AnsatzTopology topology = circular_topology(2);
  SolverConfig config = exact_config(2026);
  config.max_steps = 48;

  const BatchStatistics a =
      run_batch(source, pattern, topology, config, 4, BatchMode::Search);
  const BatchStatistics b =
      run_batch(source, pattern, topology, config, 4, BatchMode::Search);
  CHECK(a.solutions == b.solutions);
  REQUIRE(a.run_results.size() == 4);
  for (size_t r = 0; r < 4; ++r) {
    CHECK(a.run_results[r].quantum_loss_trace ==
          b.run_results[r].quantum_loss_trace);
    CHECK(a.run_results[r].solutions == b.run_results[r].solutions);
  }

  CHECK(a.runs == 4);
  CHECK(a.convergent_runs >= 1);
  CHECK(a.convergent_fraction ==
        doctest::Approx(a.convergent_runs / 4.0));
  // Solutions come back in original labels and actually solve the instance.
  std::set<std::vector<int>> subsets;
  for (const auto& s : a.solutions) {
    CHECK(partial_loss(source, pattern, s) == 0);
    std::vector<int> sorted = s.image;
    std::sort(sorted.begin(), sorted.end());
    subsets.insert(sorted);
  }
  CHECK(a.unique_image_subsets == subsets.size());

  int max_steps = 0;
  double sum_steps = 0.0;
  int convergent = 0;
  for (const auto& r : a.run_results) {
    if (!r.converged) continue;
    ++convergent;
    sum_steps += r.steps_used;
    max_steps = std::max(max_steps, r.steps_used);
  }
  CHECK(convergent == a.convergent_runs);
  if (convergent > 0) {
    CHECK(a.average_steps_to_convergence ==
          doctest::Approx(sum_steps / convergent));
    CHECK(a.max_steps_to_convergence == max_steps);
  }
}

TEST_CASE("convergence mode keeps the planted instance fixed") {
  const AdjacencyMatrix source = benchmark_graph();
  const AnsatzTopology topology = circular_topology(2);
  const PlantedInstance planted = plant_pattern(source, topology, 2, 8);
  SolverConfig config = exact_config(31);
  config.max_steps = 64;
  const BatchStatistics stats = run_batch(source, planted.pattern, topology,
                                          config, 3, BatchMode::Convergence);
  CHECK(stats.runs == 3);
  for (const auto& s : stats.solutions) {
    CHECK(partial_loss(source, planted.pattern, s) == 0);
  }
}

TEST_CASE("solver configuration validation") {
  SolverConfig config;
  config.validate();
  SolverConfig bad = config;
  bad.learning_rate = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.momentum = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.momentum = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.fd_epsilon = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.max_steps = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.samples_per_step = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = config;
  bad.shots = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("shot noise perturbs but does not break the utility") {
  const LossCircuitSpec spec =
      make_spec(benchmark_graph(), AdjacencyMatrix(4), circular_topology(2),
                LossMode::GraphIsomorphism);
  const std::vector<double> zero(spec.topology.parameter_count(), 0.0);
  SolverConfig config;
  config.shots = 1024;
  config.seed = 12;
  SplitMix64 rng(12);
  const double noisy = utility(spec, zero, config, rng);
  CHECK(noisy >= 0.0);
  CHECK(noisy <= 1.0);
  // sqrt(binomial estimate of 1/4): within 5 sigma of 0.5 after sqrt.
  CHECK(std::abs(noisy - 0.5) < 0.1);
  // Fresh draws differ across calls with the same generator.
  double second = utility(spec, zero, config, rng);
  double third = utility(spec, zero, config, rng);
  CHECK((second != noisy || third != noisy));
}
