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

#ifndef QSI_SIMULATOR_HPP_
#define QSI_SIMULATOR_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qsi/encoding.hpp"
#include "qsi/rng.hpp"

namespace qsi {

/// Tolerance for exact-mode equality checks throughout the project.
inline constexpr double kExactTolerance = 1e-10;

/// Dense statevector; qubit 0 is the least significant bit of the index.
struct Statevector {
  int num_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  static Statevector zero_state(int num_qubits);
  static Statevector basis_state(int num_qubits, uint64_t index);

  size_t dimension() const { return amplitudes.size(); }
  double norm_squared() const;
  /// JSON array of [re, im] pairs in index order, for fixture comparison.
  std::string to_json() const;
};

/// Hadamard applied to each listed qubit.
struct HadamardLayer {
  std::vector<int> qubits;
};

/// diag(1, e^(i lambda)) on one qubit.
struct PhaseGate {
  int qubit;
  double lambda;
};

/// Phase e^(i lambda) applied where control and target bits are both 1.
struct ControlledPhaseGate {
  int control;
  int target;
  double lambda;
};

struct SwapGate {
  int qubit_a;
  int qubit_b;
};

/**
 * Applies the +/-1 diagonal to the target register window wherever the
 * control bit is 1: amplitude at index x picks up
 * sign((x >> target_start) & (len - 1)) when bit `control` of x is set.
 * Always applied as an indexed sweep, never materialized as a matrix.
 */
struct ControlledSignDiagonal {
  int control;
  int target_start;
  PhaseDiagonal diagonal;
};

using Gate = std::variant<HadamardLayer, PhaseGate, ControlledPhaseGate,
                          SwapGate, ControlledSignDiagonal>;
using GateProgram = std::vector<Gate>;

/// Applies one gate in place. Throws on out-of-range or overlapping indices.
void apply_gate(Statevector& state, const Gate& gate);

void apply_program(Statevector& state, const GateProgram& program);

/// Runs the program on |0...0> and returns the final state.
Statevector run(const GateProgram& program, int num_qubits);

/// |<0...0| program |0...0>|^2.
double zero_probability(const GateProgram& program, int num_qubits);

/// Frequency estimate of p from `shots` Bernoulli draws; shots = 0 returns
/// p exactly. Throws if p is outside [0, 1] or shots is negative.
double estimate_probability(double p, int shots, SplitMix64& rng);
double estimate_probability(double p, int shots, uint64_t seed);

}  // namespace qsi

#endif  // QSI_SIMULATOR_HPP_
