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

#ifndef QSI_GRAPH_HPP_
#define QSI_GRAPH_HPP_

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsi/rng.hpp"

namespace qsi {

using BigInt = boost::multiprecision::cpp_int;

/// Largest supported adjacency-matrix order (configuration cap).
inline constexpr int kMaxOrder = 1 << 10;

/// Simple undirected graph: vertex count plus a normalized edge set.
struct Graph {
  int num_vertices = 0;
  std::set<std::pair<int, int>> edges;  // stored with u < v

  Graph() = default;
  explicit Graph(int n);

  /// Inserts {u, v}. Rejects self-loops and out-of-range endpoints.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
};

/**
 * Symmetric 0/1 adjacency matrix with zero diagonal, order N = 2^k.
 * Bits are stored as a dense row-major bit field.
 */
class AdjacencyMatrix {
 public:
  /// Zero matrix of the given order; order must be a power of two <= kMaxOrder.
  explicit AdjacencyMatrix(int order);

  int order() const { return order_; }
  int log2_order() const { return log2_order_; }

  bool at(int i, int j) const { return bits_[static_cast<size_t>(i) * order_ + j]; }

  /// Sets A[i][j] = A[j][i] = value. Rejects diagonal entries.
  void set_edge(int i, int j, bool value);

  bool operator==(const AdjacencyMatrix& other) const = default;

 private:
  int order_;
  int log2_order_;
  std::vector<bool> bits_;
};

/// Bijection on [0, n): mapping[i] is the image of vertex i.
struct VertexPermutation {
  std::vector<int> mapping;

  static VertexPermutation identity(int n);
  int size() const { return static_cast<int>(mapping.size()); }
  int operator()(int i) const { return mapping[i]; }
  bool is_valid() const;
  VertexPermutation inverse() const;
  /// Function composition: (this after first)(i) = this(first(i)).
  VertexPermutation after(const VertexPermutation& first) const;
};

/**
 * Injective map from pattern vertices into source vertices:
 * image[i] is the source vertex assigned to pattern vertex i.
 */
struct PartialPermutation {
  int source_order = 0;
  std::vector<int> image;

  bool is_valid() const;
  bool operator==(const PartialPermutation& other) const = default;
  bool operator<(const PartialPermutation& other) const;
};

/// Embeds a graph into the smallest power-of-two order, padding with
/// isolated vertices at the high indices.
AdjacencyMatrix pad_to_power_of_two(const Graph& g);

/// Graph with one vertex per matrix row and the matrix's edge set.
Graph to_graph(const AdjacencyMatrix& a);

/// Seeded G(n, p) graph; identical seeds give identical edge sets.
Graph erdos_renyi(int n, double edge_probability, uint64_t seed);

/// Conjugation by the permutation matrix: result[i][j] = a[p^-1(i)][p^-1(j)].
AdjacencyMatrix permute(const AdjacencyMatrix& a, const VertexPermutation& p);

/// Fisher-Yates shuffle driven by the generator.
VertexPermutation random_permutation(int n, SplitMix64& rng);

/**
 * Number of entry mismatches between the upper pattern-order block of the
 * relabelled source (permute(source, p)) and the pattern. Equals the squared
 * Frobenius distance of the selected block, since entries are 0/1.
 */
int classical_loss(const AdjacencyMatrix& source, const AdjacencyMatrix& pattern,
                   const VertexPermutation& p);

/// Same count evaluated directly from a partial permutation's image.
int partial_loss(const AdjacencyMatrix& source, const AdjacencyMatrix& pattern,
                 const PartialPermutation& w);

/// Truncates a full permutation to the pattern block: image[i] = p^-1(i).
PartialPermutation to_partial(const VertexPermutation& p, int pattern_order);

/// classical_loss normalized by pattern_order^2; lies in [0, 1].
double disparity(const AdjacencyMatrix& source, const AdjacencyMatrix& pattern,
                 const VertexPermutation& p);

/// Mismatch fraction between two equal-order matrices.
double disparity(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

/// Count of injective maps from pattern to source vertices:
/// source_order! / (source_order - pattern_order)!.
BigInt search_space_size(int source_order, int pattern_order);

}  // namespace qsi

#endif  // QSI_GRAPH_HPP_
