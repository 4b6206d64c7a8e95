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

#ifndef QSI_ENCODING_HPP_
#define QSI_ENCODING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qsi/graph.hpp"

namespace qsi {

/**
 * Diagonal of +/-1 signs over the two index registers: entry (i, j) sits at
 * flat position i * N + j. An adjacency matrix A maps to the diagonal with
 * sign (-1)^A[i][j], so composing diagonals multiplies signs entrywise,
 * which is addition of the adjacency bits mod 2.
 *
 * Signs are stored packed, one bit per entry, bit = 1 meaning sign -1;
 * composition is then a word-wise XOR.
 */
class PhaseDiagonal {
 public:
  /// All-positive (identity) diagonal for matrices of the given order.
  explicit PhaseDiagonal(int order);

  int order() const { return order_; }
  /// Number of diagonal entries, order^2.
  size_t length() const { return static_cast<size_t>(order_) * order_; }
  /// Number of register qubits the diagonal spans, 2 * log2(order).
  int num_qubits() const;

  bool negative(size_t flat) const {
    return (bits_[flat >> 6] >> (flat & 63)) & 1u;
  }
  int sign(size_t flat) const { return negative(flat) ? -1 : 1; }
  int sign(int i, int j) const {
    return sign(static_cast<size_t>(i) * order_ + j);
  }
  void set_negative(size_t flat, bool value);

  bool is_identity() const;
  bool operator==(const PhaseDiagonal& other) const = default;

  const std::vector<uint64_t>& words() const { return bits_; }
  std::vector<uint64_t>& words() { return bits_; }

 private:
  int order_;
  std::vector<uint64_t> bits_;
};

/// Sign diagonal of an adjacency matrix: sign(i, j) = (-1)^A[i][j].
PhaseDiagonal phase_diagonal(const AdjacencyMatrix& a);

/// Entrywise product of two equal-order diagonals (XOR of the sign bits).
PhaseDiagonal compose(const PhaseDiagonal& a, const PhaseDiagonal& b);

/// Embeds a pattern diagonal into a larger order: entries with both indices
/// below the original order are copied, everything else stays +1.
PhaseDiagonal extend_pattern(const PhaseDiagonal& pattern, int target_order);

/**
 * Whether the controlled-diagonal encodings of two equal-order diagonals are
 * physically distinguishable, i.e. differ by more than a global phase.
 *
 * For order <= 4 this is decided by explicitly building conj(U) (x) U for
 * both encodings U = H^(x)m (I (+) D) H^(x)m and comparing entrywise, the
 * construction that is insensitive to global phase by definition. Above
 * that cap the sign sequences are compared directly, which the small-order
 * tensor check validates as equivalent.
 */
bool distinguishable(const PhaseDiagonal& a, const PhaseDiagonal& b);

/// Signs as +/-1 integers, flat order; used by test fixtures and dumps.
std::vector<int> to_sign_vector(const PhaseDiagonal& d);

}  // namespace qsi

#endif  // QSI_ENCODING_HPP_
