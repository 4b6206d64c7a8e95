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

#include "qsi/ansatz.hpp"

#include <stdexcept>

namespace qsi {

namespace {

void check_primitive(const PrimitiveSpec& p, int width) {
  if (p.qubit_a < 0 || p.qubit_a >= width) {
    throw std::invalid_argument("primitive qubit outside the register");
  }
  if (p.kind == PrimitiveSpec::Kind::Entangling) {
    if (p.qubit_b < 0 || p.qubit_b >= width || p.qubit_b == p.qubit_a) {
      throw std::invalid_argument("entangling primitive needs two distinct register qubits");
    }
    if (p.direction != 0 && p.direction != 1) {
      throw std::invalid_argument("entangling direction must be 0 or 1");
    }
  }
}

void emit_primitive(GateProgram& program, const PrimitiveSpec& p, double theta,
                    int offset) {
  if (p.kind == PrimitiveSpec::Kind::NonEntangling) {
    const int q = p.qubit_a + offset;
    program.push_back(HadamardLayer{{q}});
    program.push_back(PhaseGate{q, theta});
    program.push_back(HadamardLayer{{q}});
  } else {
    const int c = p.control() + offset;
    const int t = p.target() + offset;
    program.push_back(HadamardLayer{{t}});
    program.push_back(ControlledPhaseGate{c, t, theta});
    program.push_back(HadamardLayer{{t}});
  }
}

}  // namespace

void AnsatzTopology::validate() const {
  if (register_width < 1) {
    throw std::invalid_argument("register width must be positive");
  }
  for (const PrimitiveSpec& p : primitives) check_primitive(p, register_width);
}

std::vector<PrimitiveSpec> block(int qa, int qb,
                                 const std::array<int, 3>& directions) {
  return {
      PrimitiveSpec::non_entangling(qa),
      PrimitiveSpec::non_entangling(qb),
      PrimitiveSpec::entangling(qa, qb, directions[0]),
      PrimitiveSpec::entangling(qa, qb, directions[1]),
      PrimitiveSpec::entangling(qa, qb, directions[2]),
  };
}

AnsatzTopology circular_topology(int k) {
  if (k < 2) {
    throw std::invalid_argument("circular topology needs at least 2 qubits");
  }
  AnsatzTopology topology;
  topology.register_width = k;
  for (int q = 0; q < k; ++q) {
    const auto b = block(q, (q + 1) % k);
    topology.primitives.insert(topology.primitives.end(), b.begin(), b.end());
  }
  topology.validate();
  return topology;
}

void emit_gates(GateProgram& program, const AnsatzTopology& topology,
                std::span<const double> theta, bool adjoint,
                int register_offset) {
  topology.validate();
  if (static_cast<int>(theta.size()) != topology.parameter_count()) {
    throw std::invalid_argument("angle count does not match parameter count");
  }
  if (register_offset < 0) throw std::invalid_argument("negative register offset");
  const int n = topology.parameter_count();
  for (int step = 0; step < n; ++step) {
    const int i = adjoint ? n - 1 - step : step;
    const double angle = adjoint ? -theta[i] : theta[i];
    emit_primitive(program, topology.primitives[i], angle, register_offset);
  }
}

VertexPermutation classical_permutation(const AnsatzTopology& topology,
                                        const std::vector<uint8_t>& g) {
  topology.validate();
  if (static_cast<int>(g.size()) != topology.parameter_count()) {
    throw std::invalid_argument("bit count does not match parameter count");
  }
  const int n = 1 << topology.register_width;
  VertexPermutation perm = VertexPermutation::identity(n);
  for (size_t i = 0; i < g.size(); ++i) {
    if (!g[i]) continue;
    const PrimitiveSpec& p = topology.primitives[i];
    for (int v = 0; v < n; ++v) {
      int& image = perm.mapping[v];
      if (p.kind == PrimitiveSpec::Kind::NonEntangling) {
        image ^= 1 << p.qubit_a;
      } else if ((image >> p.control()) & 1) {
        image ^= 1 << p.target();
      }
    }
  }
  return perm;
}

}  // namespace qsi
