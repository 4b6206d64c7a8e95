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

#ifndef QSI_SOLVER_HPP_
#define QSI_SOLVER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "qsi/ansatz.hpp"
#include "qsi/graph.hpp"
#include "qsi/simulator.hpp"

namespace qsi {

/// Which loss circuit to assemble. GraphIsomorphism requires equal orders
/// and omits the adjoint ansatz, which a register in the uniform
/// superposition renders a global phase.
enum class LossMode { GraphIsomorphism, SubgraphIsomorphism };

/// A fully specified loss circuit family over the ansatz parameters.
struct LossCircuitSpec {
  AdjacencyMatrix source;
  AdjacencyMatrix pattern;
  AnsatzTopology topology;
  LossMode mode = LossMode::SubgraphIsomorphism;

  void validate() const;
  /// Two index registers of log2(source order) qubits plus one control.
  int num_qubits() const { return 2 * source.log2_order() + 1; }
};

/**
 * Assembles the loss circuit on 2k + 1 qubits (control on the most
 * significant qubit, index registers below it):
 *
 *  1. Hadamards on the lowest k' qubits of each register and the control,
 *     k' = log2(pattern order);
 *  2. adjoint ansatz on both registers (subgraph mode only);
 *  3. controlled sign diagonal of the source;
 *  4. ansatz on both registers;
 *  5. controlled sign diagonal of the pattern extended to the source order;
 *  6. mirror of step 1.
 *
 * The zero-basis amplitude then encodes 1 - selected-block disparity.
 */
GateProgram build_circuit(const LossCircuitSpec& spec,
                          std::span<const double> theta);

struct SolverConfig {
  double learning_rate = 0.1;
  double momentum = 0.9;
  double fd_epsilon = 0.1;
  int max_steps = 128;
  int samples_per_step = 64;
  int shots = 1024;  // 0 = exact probabilities
  uint64_t seed = 0;
  /// Forward differences use n + 1 instead of 2n evaluations per gradient.
  bool forward_difference = false;

  void validate() const;
};

/// sqrt of the (exact or shot-estimated) zero-outcome probability.
/// Shot estimates consume fresh draws from `shot_rng` on every call.
double utility(const LossCircuitSpec& spec, std::span<const double> theta,
               const SolverConfig& config, SplitMix64& shot_rng);
/// Convenience overload seeding the shot stream from config.seed.
double utility(const LossCircuitSpec& spec, std::span<const double> theta,
               const SolverConfig& config);

/// Gradient of the utility by finite differences (central by default).
std::vector<double> numerical_gradient(const LossCircuitSpec& spec,
                                       std::span<const double> theta,
                                       const SolverConfig& config,
                                       SplitMix64& shot_rng);

/// One momentum SGD step on the supplied gradient of the objective being
/// minimized: velocity' = momentum * velocity + gradient;
/// theta' = theta - learning_rate * velocity'.
void sgd_step(std::vector<double>& theta, std::vector<double>& velocity,
              std::span<const double> gradient, const SolverConfig& config);

/// Periodic triangle wave: 0 at even integers, 1 at odd integers, linear
/// between, so theta = 0 never flips and theta = pi always flips.
double triangle_wave(double x);

/// Rounding probabilities p_i = triangle_wave(theta_i / pi).
std::vector<double> rounding_probabilities(std::span<const double> theta);

/// Draws g_i = 1 iff u_i <= p_i with independent per-component uniforms.
std::vector<uint8_t> probabilistic_round(std::span<const double> theta,
                                         SplitMix64& rng);
std::vector<uint8_t> probabilistic_round(std::span<const double> theta,
                                         uint64_t seed);

struct RunResult {
  bool converged = false;
  int steps_used = 0;
  /// Zero-loss assignments found, deduplicated, ordered.
  std::vector<PartialPermutation> solutions;
  /// Per step: 1 - utility at the updated angles.
  std::vector<double> quantum_loss_trace;
  /// Per step: best sampled classical loss.
  std::vector<int> best_classical_loss_trace;
  std::vector<double> final_theta;
};

/**
 * One optimization run: angles start uniform in [0, pi]^n, then each step
 * updates them with momentum SGD on the negated utility, rounds the updated
 * angles to samples_per_step candidate bit vectors and scores the induced
 * assignments classically. Stops as soon as a zero-loss assignment exists.
 */
RunResult run_single(const LossCircuitSpec& spec, const SolverConfig& config);

/// Search randomizes each run by a fresh source relabelling; convergence
/// keeps the instance fixed so planted solutions stay ansatz-reachable.
enum class BatchMode { Search, Convergence };

struct BatchStatistics {
  int runs = 0;
  int convergent_runs = 0;
  double convergent_fraction = 0.0;
  /// Distinct image vertex subsets over all merged solutions.
  uint64_t unique_image_subsets = 0;
  /// Merged zero-loss assignments in original source labels, deduplicated.
  std::vector<PartialPermutation> solutions;
  /// Over convergent runs only; zero when none converged.
  double average_steps_to_convergence = 0.0;
  int max_steps_to_convergence = 0;
  /// Per-run details, index r driven by seed stream r.
  std::vector<RunResult> run_results;
};

/**
 * Runs `runs` independent optimizations with per-run seeds derived from
 * config.seed. In search mode each run sees a randomly relabelled source
 * and reported solutions are composed back into original labels; every
 * merged solution is re-verified against the original instance.
 */
BatchStatistics run_batch(const AdjacencyMatrix& source,
                          const AdjacencyMatrix& pattern,
                          const AnsatzTopology& topology,
                          const SolverConfig& config, int runs, BatchMode mode);

struct PlantedInstance {
  AdjacencyMatrix pattern;
  /// Generator bits whose angle encoding solves the instance exactly.
  std::vector<uint8_t> g;
  /// The known zero-loss assignment.
  PartialPermutation planted_image;
};

/// Draws random generator bits and cuts the pattern out of the relabelled
/// source, so the produced instance is solvable by construction and the
/// solution is reachable by the ansatz.
PlantedInstance plant_pattern(const AdjacencyMatrix& source,
                              const AnsatzTopology& topology, int pattern_order,
                              uint64_t seed);

}  // namespace qsi

#endif  // QSI_SOLVER_HPP_
