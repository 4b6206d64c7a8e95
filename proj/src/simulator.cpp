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

#include "qsi/simulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qsi {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit(int q, int num_qubits) {
  if (q < 0 || q >= num_qubits) {
    throw std::out_of_range("qubit index " + std::to_string(q) +
                            " out of range for " + std::to_string(num_qubits) +
                            " qubits");
  }
}

void apply_hadamard(Statevector& state, int qubit) {
  check_qubit(qubit, state.num_qubits);
  const uint64_t bit = uint64_t{1} << qubit;
  const uint64_t dim = state.dimension();
  for (uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const auto a0 = state.amplitudes[i];
    const auto a1 = state.amplitudes[i | bit];
    state.amplitudes[i] = (a0 + a1) * kInvSqrt2;
    state.amplitudes[i | bit] = (a0 - a1) * kInvSqrt2;
  }
}

struct GateApplier {
  Statevector& state;

  void operator()(const HadamardLayer& g) const {
    for (int q : g.qubits) apply_hadamard(state, q);
  }

  void operator()(const PhaseGate& g) const {
    check_qubit(g.qubit, state.num_qubits);
    const uint64_t bit = uint64_t{1} << g.qubit;
    const std::complex<double> phase = std::polar(1.0, g.lambda);
    for (uint64_t i = 0; i < state.dimension(); ++i) {
      if (i & bit) state.amplitudes[i] *= phase;
    }
  }

  void operator()(const ControlledPhaseGate& g) const {
    check_qubit(g.control, state.num_qubits);
    check_qubit(g.target, state.num_qubits);
    if (g.control == g.target) {
      throw std::invalid_argument("controlled phase needs distinct qubits");
    }
    const uint64_t mask =
        (uint64_t{1} << g.control) | (uint64_t{1} << g.target);
    const std::complex<double> phase = std::polar(1.0, g.lambda);
    for (uint64_t i = 0; i < state.dimension(); ++i) {
      if ((i & mask) == mask) state.amplitudes[i] *= phase;
    }
  }

  void operator()(const SwapGate& g) const {
    check_qubit(g.qubit_a, state.num_qubits);
    check_qubit(g.qubit_b, state.num_qubits);
    if (g.qubit_a == g.qubit_b) {
      throw std::invalid_argument("swap needs distinct qubits");
    }
    const uint64_t bit_a = uint64_t{1} << g.qubit_a;
    const uint64_t bit_b = uint64_t{1} << g.qubit_b;
    for (uint64_t i = 0; i < state.dimension(); ++i) {
      if ((i & bit_a) && !(i & bit_b)) {
        std::swap(state.amplitudes[i], state.amplitudes[(i ^ bit_a) | bit_b]);
      }
    }
  }

  void operator()(const ControlledSignDiagonal& g) const {
    const int width = g.diagonal.num_qubits();
    check_qubit(g.control, state.num_qubits);
    check_qubit(g.target_start, state.num_qubits);
    check_qubit(g.target_start + width - 1, state.num_qubits);
    if (g.control >= g.target_start && g.control < g.target_start + width) {
      throw std::invalid_argument("control qubit inside the diagonal window");
    }
    const uint64_t control_bit = uint64_t{1} << g.control;
    const uint64_t window = (uint64_t{1} << width) - 1;
    for (uint64_t i = 0; i < state.dimension(); ++i) {
      if ((i & control_bit) &&
          g.diagonal.negative((i >> g.target_start) & window)) {
        state.amplitudes[i] = -state.amplitudes[i];
      }
    }
  }
};

}  // namespace

Statevector Statevector::zero_state(int num_qubits) {
  return basis_state(num_qubits, 0);
}

Statevector Statevector::basis_state(int num_qubits, uint64_t index) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("qubit count out of range");
  }
  Statevector s;
  s.num_qubits = num_qubits;
  s.amplitudes.assign(uint64_t{1} << num_qubits, {0.0, 0.0});
  if (index >= s.dimension()) {
    throw std::out_of_range("basis index out of range");
  }
  s.amplitudes[index] = {1.0, 0.0};
  return s;
}

double Statevector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return acc;
}

std::string Statevector::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : amplitudes) {
    arr.push_back({a.real(), a.imag()});
  }
  return arr.dump();
}

void apply_gate(Statevector& state, const Gate& gate) {
  std::visit(GateApplier{state}, gate);
}

void apply_program(Statevector& state, const GateProgram& program) {
  for (const Gate& g : program) apply_gate(state, g);
}

Statevector run(const GateProgram& program, int num_qubits) {
  Statevector state = Statevector::zero_state(num_qubits);
  apply_program(state, program);
  return state;
}

double zero_probability(const GateProgram& program, int num_qubits) {
  return std::norm(run(program, num_qubits).amplitudes[0]);
}

double estimate_probability(double p, int shots, SplitMix64& rng) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("probability outside [0, 1]");
  }
  if (shots < 0) throw std::invalid_argument("negative shot count");
  if (shots == 0) return p;
  int hits = 0;
  for (int s = 0; s < shots; ++s) {
    if (rng.next_double() < p) ++hits;
  }
  return static_cast<double>(hits) / shots;
}

double estimate_probability(double p, int shots, uint64_t seed) {
  SplitMix64 rng(seed);
  return estimate_probability(p, shots, rng);
}

}  // namespace qsi
