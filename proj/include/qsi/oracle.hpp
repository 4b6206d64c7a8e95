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

#ifndef QSI_ORACLE_HPP_
#define QSI_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qsi/graph.hpp"

namespace qsi {

/// Default candidate cap for exhaustive enumeration.
inline constexpr uint64_t kEnumerationCap = 10'000'000;

/// Exhaustive ground truth for one instance.
struct MatchCensus {
  /// Zero-loss injective maps, counted as ordered assignments.
  uint64_t total_matches = 0;
  /// Distinct image vertex subsets among the matches.
  uint64_t unique_solutions = 0;
  /// Every match, in lexicographic image order.
  std::vector<PartialPermutation> matches;
};

/**
 * Brute-force census: iterates every injective map from pattern vertices to
 * source vertices in lexicographic order and scores each with partial_loss.
 * Deliberately does no pruning so it stays an independent check on the loss
 * itself. Returns nullopt (an explicit refusal, not an error) when the
 * candidate count search_space_size(...) exceeds `cap`.
 */
std::optional<MatchCensus> enumerate_matches(const AdjacencyMatrix& source,
                                             const AdjacencyMatrix& pattern,
                                             uint64_t cap = kEnumerationCap);

/// Depth-first match search with induced-edge consistency pruning; returns
/// exactly enumerate_matches(...)->matches but without the candidate sweep.
std::vector<PartialPermutation> backtracking_match(const AdjacencyMatrix& source,
                                                   const AdjacencyMatrix& pattern);

/**
 * Closed-form zero-basis amplitude of the loss circuit at the angles
 * encoding permutation p:
 *   1/2 + (1 / (2 nb^2)) * sum_(i,j < nb) (-1)^(A[p^-1(i)][p^-1(j)] + B[i][j])
 * which equals 1 - disparity of the selected block. Always in [0, 1].
 */
double closed_form_amplitude(const AdjacencyMatrix& source,
                             const AdjacencyMatrix& pattern,
                             const VertexPermutation& p);

/// Qubit budgets for an n-vertex problem under different formulations.
struct QubitRequirements {
  int this_method;     // 2 ceil(log2 n) + 1
  int qubo_full;       // n^2
  int compressed_min;  // n + 2
  int compressed_max;  // n^2
};

QubitRequirements qubit_requirements(int n);

}  // namespace qsi

#endif  // QSI_ORACLE_HPP_
