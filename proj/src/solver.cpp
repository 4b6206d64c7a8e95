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

#include "qsi/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "qsi/encoding.hpp"

namespace qsi {

namespace {

// Independent per-run random streams.
enum StreamId : uint64_t {
  kThetaStream = 0,
  kShotStream = 1,
  kRoundStream = 2,
  kRelabelStream = 3,
};

std::vector<int> low_qubits_of_both_registers(int k, int k_prime) {
  std::vector<int> qubits;
  for (int q = 0; q < k_prime; ++q) qubits.push_back(q);
  for (int q = 0; q < k_prime; ++q) qubits.push_back(k + q);
  qubits.push_back(2 * k);  // control
  return qubits;
}

}  // namespace

void LossCircuitSpec::validate() const {
  if (pattern.order() > source.order()) {
    throw std::invalid_argument("pattern order exceeds source order");
  }
  if (mode == LossMode::GraphIsomorphism && pattern.order() != source.order()) {
    throw std::invalid_argument("graph-isomorphism mode requires equal orders");
  }
  if (topology.register_width != source.log2_order()) {
    throw std::invalid_argument("ansatz register width must match the source index register");
  }
  topology.validate();
}

GateProgram build_circuit(const LossCircuitSpec& spec,
                          std::span<const double> theta) {
  spec.validate();
  const int k = spec.source.log2_order();
  const int k_prime = spec.pattern.log2_order();
  const int control = 2 * k;

  GateProgram program;
  const HadamardLayer prep{low_qubits_of_both_registers(k, k_prime)};
  program.push_back(prep);
  if (spec.mode == LossMode::SubgraphIsomorphism) {
    emit_gates(program, spec.topology, theta, /*adjoint=*/true, 0);
    emit_gates(program, spec.topology, theta, /*adjoint=*/true, k);
  }
  program.push_back(ControlledSignDiagonal{
      control, 0, phase_diagonal(spec.source)});
  emit_gates(program, spec.topology, theta, /*adjoint=*/false, 0);
  emit_gates(program, spec.topology, theta, /*adjoint=*/false, k);
  program.push_back(ControlledSignDiagonal{
      control, 0,
      extend_pattern(phase_diagonal(spec.pattern), spec.source.order())});
  program.push_back(prep);
  return program;
}

void SolverConfig::validate() const {
  if (learning_rate <= 0.0) throw std::invalid_argument("learning rate must be positive");
  if (momentum < 0.0 || momentum >= 1.0) throw std::invalid_argument("momentum must lie in [0, 1)");
  if (fd_epsilon <= 0.0) throw std::invalid_argument("difference step must be positive");
  if (max_steps < 1) throw std::invalid_argument("step budget must be positive");
  if (samples_per_step < 1) throw std::invalid_argument("sample count must be positive");
  if (shots < 0) throw std::invalid_argument("negative shot count");
}

double utility(const LossCircuitSpec& spec, std::span<const double> theta,
               const SolverConfig& config, SplitMix64& shot_rng) {
  const double p0 = zero_probability(build_circuit(spec, theta), spec.num_qubits());
  // Guard against p0 drifting epsilon past 1 before the Bernoulli sampler.
  const double clamped = std::clamp(p0, 0.0, 1.0);
  return std::sqrt(estimate_probability(clamped, config.shots, shot_rng));
}

double utility(const LossCircuitSpec& spec, std::span<const double> theta,
               const SolverConfig& config) {
  SplitMix64 rng = SplitMix64(config.seed).split(kShotStream);
  return utility(spec, theta, config, rng);
}

std::vector<double> numerical_gradient(const LossCircuitSpec& spec,
                                       std::span<const double> theta,
                                       const SolverConfig& config,
                                       SplitMix64& shot_rng) {
  config.validate();
  std::vector<double> shifted(theta.begin(), theta.end());
  std::vector<double> grad(theta.size());
  const double eps = config.fd_epsilon;
  const double base =
      config.forward_difference ? utility(spec, shifted, config, shot_rng) : 0.0;
  for (size_t i = 0; i < theta.size(); ++i) {
    if (config.forward_difference) {
      shifted[i] = theta[i] + eps;
      const double up = utility(spec, shifted, config, shot_rng);
      grad[i] = (up - base) / eps;
    } else {
      shifted[i] = theta[i] + eps;
      const double up = utility(spec, shifted, config, shot_rng);
      shifted[i] = theta[i] - eps;
      const double down = utility(spec, shifted, config, shot_rng);
      grad[i] = (up - down) / (2.0 * eps);
    }
    shifted[i] = theta[i];
  }
  return grad;
}

void sgd_step(std::vector<double>& theta, std::vector<double>& velocity,
              std::span<const double> gradient, const SolverConfig& config) {
  if (theta.size() != velocity.size() || theta.size() != gradient.size()) {
    throw std::invalid_argument("parameter, velocity and gradient sizes differ");
  }
  for (size_t i = 0; i < theta.size(); ++i) {
    velocity[i] = config.momentum * velocity[i] + gradient[i];
    theta[i] -= config.learning_rate * velocity[i];
  }
}

double triangle_wave(double x) {
  const double fl = std::floor(x);
  const double frac = x - fl;
  const long long parity = static_cast<long long>(std::fmod(fl, 2.0));
  const int even_odd = parity == 0 ? 0 : 1;  // fmod keeps sign; odd is +/-1
  return std::abs(static_cast<double>(even_odd) - frac);
}

std::vector<double> rounding_probabilities(std::span<const double> theta) {
  std::vector<double> p(theta.size());
  for (size_t i = 0; i < theta.size(); ++i) {
    p[i] = triangle_wave(theta[i] / std::numbers::pi);
  }
  return p;
}

std::vector<uint8_t> probabilistic_round(std::span<const double> theta,
                                         SplitMix64& rng) {
  const std::vector<double> p = rounding_probabilities(theta);
  std::vector<uint8_t> g(theta.size());
  for (size_t i = 0; i < p.size(); ++i) {
    g[i] = rng.next_double() <= p[i] ? 1 : 0;
  }
  return g;
}

std::vector<uint8_t> probabilistic_round(std::span<const double> theta,
                                         uint64_t seed) {
  SplitMix64 rng(seed);
  return probabilistic_round(theta, rng);
}

RunResult run_single(const LossCircuitSpec& spec, const SolverConfig& config) {
  spec.validate();
  config.validate();
  const SplitMix64 master(config.seed);
  SplitMix64 theta_rng = master.split(kThetaStream);
  SplitMix64 shot_rng = master.split(kShotStream);
  SplitMix64 round_rng = master.split(kRoundStream);

  const int n = spec.topology.parameter_count();
  const int nb = spec.pattern.order();
  std::vector<double> theta(n);
  for (double& t : theta) t = theta_rng.next_double() * std::numbers::pi;
  std::vector<double> velocity(n, 0.0);

  RunResult result;
  std::set<PartialPermutation> found;
  for (int step = 1; step <= config.max_steps; ++step) {
    std::vector<double> grad = numerical_gradient(spec, theta, config, shot_rng);
    for (double& gi : grad) gi = -gi;  // minimize the negated utility
    sgd_step(theta, velocity, grad, config);

    result.quantum_loss_trace.push_back(
        1.0 - utility(spec, theta, config, shot_rng));

    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < config.samples_per_step; ++s) {
      const std::vector<uint8_t> g = probabilistic_round(theta, round_rng);
      const VertexPermutation perm = classical_permutation(spec.topology, g);
      const int loss = classical_loss(spec.source, spec.pattern, perm);
      best = std::min(best, loss);
      if (loss == 0) found.insert(to_partial(perm, nb));
    }
    result.best_classical_loss_trace.push_back(best);
    result.steps_used = step;
    if (!found.empty()) {
      result.converged = true;
      break;
    }
  }
  result.solutions.assign(found.begin(), found.end());
  result.final_theta = std::move(theta);
  return result;
}

BatchStatistics run_batch(const AdjacencyMatrix& source,
                          const AdjacencyMatrix& pattern,
                          const AnsatzTopology& topology,
                          const SolverConfig& config, int runs, BatchMode mode) {
  if (runs < 1) throw std::invalid_argument("run count must be positive");
  config.validate();

  BatchStatistics stats;
  stats.runs = runs;
  std::set<PartialPermutation> merged;

  for (int r = 0; r < runs; ++r) {
    const uint64_t run_seed = derive_seed(config.seed, static_cast<uint64_t>(r));
    VertexPermutation relabel = VertexPermutation::identity(source.order());
    if (mode == BatchMode::Search) {
      SplitMix64 relabel_rng = SplitMix64(run_seed).split(kRelabelStream);
      relabel = random_permutation(source.order(), relabel_rng);
    }
    LossCircuitSpec spec{permute(source, relabel), pattern, topology,
                         LossMode::SubgraphIsomorphism};
    SolverConfig run_config = config;
    run_config.seed = run_seed;
    RunResult result = run_single(spec, run_config);

    // Compose the relabelling back so images refer to original vertices,
    // then re-verify each solution against the original instance.
    const VertexPermutation undo = relabel.inverse();
    for (PartialPermutation& w : result.solutions) {
      for (int& v : w.image) v = undo(v);
      if (partial_loss(source, pattern, w) != 0) {
        throw std::logic_error("relabelled solution failed re-verification");
      }
      merged.insert(w);
    }
    std::sort(result.solutions.begin(), result.solutions.end());

    if (result.converged) {
      ++stats.convergent_runs;
      stats.average_steps_to_convergence += result.steps_used;
      stats.max_steps_to_convergence =
          std::max(stats.max_steps_to_convergence, result.steps_used);
    }
    stats.run_results.push_back(std::move(result));
  }

  stats.convergent_fraction =
      static_cast<double>(stats.convergent_runs) / runs;
  if (stats.convergent_runs > 0) {
    stats.average_steps_to_convergence /= stats.convergent_runs;
  }
  stats.solutions.assign(merged.begin(), merged.end());
  std::set<std::vector<int>> subsets;
  for (const PartialPermutation& w : stats.solutions) {
    std::vector<int> sorted = w.image;
    std::sort(sorted.begin(), sorted.end());
    subsets.insert(std::move(sorted));
  }
  stats.unique_image_subsets = subsets.size();
  return stats;
}

PlantedInstance plant_pattern(const AdjacencyMatrix& source,
                              const AnsatzTopology& topology, int pattern_order,
                              uint64_t seed) {
  if (topology.register_width != source.log2_order()) {
    throw std::invalid_argument("ansatz register width must match the source index register");
  }
  if (pattern_order > source.order()) {
    throw std::invalid_argument("pattern order exceeds source order");
  }
  SplitMix64 rng(seed);
  PlantedInstance planted{AdjacencyMatrix(pattern_order), {}, {}};
  planted.g.resize(topology.parameter_count());
  for (uint8_t& bit : planted.g) bit = static_cast<uint8_t>(rng.next_u64() & 1);

  const VertexPermutation perm = classical_permutation(topology, planted.g);
  const AdjacencyMatrix relabelled = permute(source, perm);
  for (int i = 0; i < pattern_order; ++i) {
    for (int j = i + 1; j < pattern_order; ++j) {
      planted.pattern.set_edge(i, j, relabelled.at(i, j));
    }
  }
  planted.planted_image = to_partial(perm, pattern_order);
  if (partial_loss(source, planted.pattern, planted.planted_image) != 0) {
    throw std::logic_error("planted image failed verification");
  }
  return planted;
}

}  // namespace qsi
