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

#ifndef QSI_ANSATZ_HPP_
#define QSI_ANSATZ_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qsi/graph.hpp"
#include "qsi/simulator.hpp"

namespace qsi {

/**
 * One parametrized factor exp(-i theta/2 P) of the ansatz, where P is a
 * self-inverse permutation:
 *
 *  - NonEntangling(q): P = X on qubit q, realized as H, Phase(theta), H.
 *  - Entangling(qa, qb, a): P = controlled-X on the pair; a = 0 controls on
 *    qa targeting qb, a = 1 the reverse. Realized as H(target),
 *    ControlledPhase(theta), H(target).
 *
 * At theta = pi the factor is exactly the permutation P (the Phase(pi) core
 * makes the conjugations collapse to X / controlled-X), which is what the
 * classical rounding relies on.
 */
struct PrimitiveSpec {
  enum class Kind { NonEntangling, Entangling };

  Kind kind;
  int qubit_a;
  int qubit_b;
  int direction;

  static PrimitiveSpec non_entangling(int qubit) {
    return {Kind::NonEntangling, qubit, -1, 0};
  }
  static PrimitiveSpec entangling(int qa, int qb, int direction) {
    return {Kind::Entangling, qa, qb, direction};
  }

  int control() const { return direction == 0 ? qubit_a : qubit_b; }
  int target() const { return direction == 0 ? qubit_b : qubit_a; }

  bool operator==(const PrimitiveSpec& other) const = default;
};

/// Ordered primitives acting on one k-qubit index register; the parameter
/// count equals the primitive count.
struct AnsatzTopology {
  int register_width = 0;
  std::vector<PrimitiveSpec> primitives;

  int parameter_count() const { return static_cast<int>(primitives.size()); }
  void validate() const;
};

/// Five-primitive block on a qubit pair: NonEntangling on each qubit, then
/// three entangling primitives with the given direction pattern.
std::vector<PrimitiveSpec> block(int qa, int qb,
                                 const std::array<int, 3>& directions = {0, 1, 0});

/// Ring of blocks on pairs (0,1), (1,2), ..., (k-1,0); 5k parameters.
/// Requires k >= 2 (k = 2 degenerates to two blocks on the same pair).
AnsatzTopology circular_topology(int k);

/**
 * Appends the ansatz gates for the given angles to `program`, acting on
 * qubits [register_offset, register_offset + k). `adjoint` emits the inverse
 * (reversed primitive order, negated angles).
 */
void emit_gates(GateProgram& program, const AnsatzTopology& topology,
                std::span<const double> theta, bool adjoint,
                int register_offset);

/**
 * The permutation on [0, 2^k) obtained by keeping exactly the primitives
 * with bit g_i = 1 at angle pi: NonEntangling(q) flips index bit q, an
 * entangling primitive flips the target bit where the control bit is 1,
 * composed in circuit order.
 */
VertexPermutation classical_permutation(const AnsatzTopology& topology,
                                        const std::vector<uint8_t>& g);

}  // namespace qsi

#endif  // QSI_ANSATZ_HPP_
