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

#include "qsi/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qsi {

namespace {

void check_order(int order) {
  if (order < 1 || order > kMaxOrder || !std::has_single_bit(static_cast<unsigned>(order))) {
    throw std::invalid_argument("adjacency order must be a power of two in [1, " +
                                std::to_string(kMaxOrder) + "], got " +
                                std::to_string(order));
  }
}

}  // namespace

Graph::Graph(int n) : num_vertices(n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
  }
}

void Graph::add_edge(int u, int v) {
  if (u == v) {
    throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
  }
  if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
    throw std::out_of_range("edge endpoint out of range");
  }
  edges.insert({std::min(u, v), std::max(u, v)});
}

bool Graph::has_edge(int u, int v) const {
  return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

AdjacencyMatrix::AdjacencyMatrix(int order) : order_(order) {
  check_order(order);
  log2_order_ = std::countr_zero(static_cast<unsigned>(order));
  bits_.assign(static_cast<size_t>(order) * order, false);
}

void AdjacencyMatrix::set_edge(int i, int j, bool value) {
  if (i == j) {
    throw std::invalid_argument("diagonal entries are fixed at zero");
  }
  if (i < 0 || j < 0 || i >= order_ || j >= order_) {
    throw std::out_of_range("matrix index out of range");
  }
  bits_[static_cast<size_t>(i) * order_ + j] = value;
  bits_[static_cast<size_t>(j) * order_ + i] = value;
}

VertexPermutation VertexPermutation::identity(int n) {
  VertexPermutation p;
  p.mapping.resize(n);
  for (int i = 0; i < n; ++i) p.mapping[i] = i;
  return p;
}

bool VertexPermutation::is_valid() const {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (int v : mapping) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

VertexPermutation VertexPermutation::inverse() const {
  VertexPermutation inv;
  inv.mapping.resize(mapping.size());
  for (int i = 0; i < size(); ++i) inv.mapping[mapping[i]] = i;
  return inv;
}

VertexPermutation VertexPermutation::after(const VertexPermutation& first) const {
  if (size() != first.size()) {
    throw std::invalid_argument("permutation size mismatch in composition");
  }
  VertexPermutation out;
  out.mapping.resize(mapping.size());
  for (int i = 0; i < size(); ++i) out.mapping[i] = mapping[first.mapping[i]];
  return out;
}

bool PartialPermutation::is_valid() const {
  std::vector<bool> seen(source_order, false);
  for (int v : image) {
    if (v < 0 || v >= source_order || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool PartialPermutation::operator<(const PartialPermutation& other) const {
  if (source_order != other.source_order) return source_order < other.source_order;
  return image < other.image;
}

AdjacencyMatrix pad_to_power_of_two(const Graph& g) {
  int order = 1;
  while (order < g.num_vertices) order <<= 1;
  AdjacencyMatrix a(order);
  for (const auto& [u, v] : g.edges) a.set_edge(u, v, true);
  return a;
}

Graph to_graph(const AdjacencyMatrix& a) {
  Graph g(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = i + 1; j < a.order(); ++j) {
      if (a.at(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

Graph erdos_renyi(int n, double edge_probability, uint64_t seed) {
  if (edge_probability < 0.0 || edge_probability > 1.0) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  Graph g(n);
  SplitMix64 rng(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_double() < edge_probability) g.add_edge(i, j);
    }
  }
  return g;
}

AdjacencyMatrix permute(const AdjacencyMatrix& a, const VertexPermutation& p) {
  if (p.size() != a.order() || !p.is_valid()) {
    throw std::invalid_argument("permutation does not act on the matrix order");
  }
  const VertexPermutation inv = p.inverse();
  AdjacencyMatrix out(a.order());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = i + 1; j < a.order(); ++j) {
      out.set_edge(i, j, a.at(inv(i), inv(j)));
    }
  }
  return out;
}

VertexPermutation random_permutation(int n, SplitMix64& rng) {
  VertexPermutation p = VertexPermutation::identity(n);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_below(static_cast<uint64_t>(i) + 1));
    std::swap(p.mapping[i], p.mapping[j]);
  }
  return p;
}

int classical_loss(const AdjacencyMatrix& source, const AdjacencyMatrix& pattern,
                   const VertexPermutation& p) {
  return partial_loss(source, pattern, to_partial(p, pattern.order()));
}

int partial_loss(const AdjacencyMatrix& source, const AdjacencyMatrix& pattern,
                 const PartialPermutation& w) {
  const int nb = pattern.order();
  if (w.source_order != source.order() || static_cast<int>(w.image.size()) != nb) {
    throw std::invalid_argument("partial permutation shape mismatch");
  }
  if (nb > source.order()) {
    throw std::invalid_argument("pattern order exceeds source order");
  }
  int mismatches = 0;
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      mismatches += source.at(w.image[i], w.image[j]) != pattern.at(i, j);
    }
  }
  return mismatches;
}

PartialPermutation to_partial(const VertexPermutation& p, int pattern_order) {
  if (pattern_order > p.size()) {
    throw std::invalid_argument("pattern order exceeds permutation size");
  }
  const VertexPermutation inv = p.inverse();
  PartialPermutation w;
  w.source_order = p.size();
  w.image.assign(inv.mapping.begin(), inv.mapping.begin() + pattern_order);
  return w;
}

double disparity(const AdjacencyMatrix& source, const AdjacencyMatrix& pattern,
                 const VertexPermutation& p) {
  const double nb = pattern.order();
  return classical_loss(source, pattern, p) / (nb * nb);
}

double disparity(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("disparity requires equal orders");
  }
  return disparity(a, b, VertexPermutation::identity(a.order()));
}

BigInt search_space_size(int source_order, int pattern_order) {
  if (pattern_order < 0 || pattern_order > source_order) {
    throw std::invalid_argument("pattern order must lie in [0, source order]");
  }
  BigInt result = 1;
  for (int t = 0; t < pattern_order; ++t) result *= source_order - t;
  return result;
}

}  // namespace qsi
