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

#include "qsi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qsi {

namespace {

void check_instance(const AdjacencyMatrix& source, const AdjacencyMatrix& pattern) {
  if (pattern.order() > source.order()) {
    throw std::invalid_argument("pattern order exceeds source order");
  }
}

uint64_t count_unique_subsets(const std::vector<PartialPermutation>& matches) {
  std::set<std::vector<int>> subsets;
  for (const PartialPermutation& w : matches) {
    std::vector<int> sorted = w.image;
    std::sort(sorted.begin(), sorted.end());
    subsets.insert(std::move(sorted));
  }
  return subsets.size();
}

void backtrack(const AdjacencyMatrix& source, const AdjacencyMatrix& pattern,
               std::vector<int>& image, std::vector<bool>& used,
               std::vector<PartialPermutation>& out) {
  const int depth = static_cast<int>(image.size());
  if (depth == pattern.order()) {
    out.push_back({source.order(), image});
    return;
  }
  for (int v = 0; v < source.order(); ++v) {
    if (used[v]) continue;
    bool consistent = true;
    for (int i = 0; i < depth && consistent; ++i) {
      consistent = source.at(v, image[i]) == pattern.at(depth, i);
    }
    if (!consistent) continue;
    used[v] = true;
    image.push_back(v);
    backtrack(source, pattern, image, used, out);
    image.pop_back();
    used[v] = false;
  }
}

}  // namespace

std::optional<MatchCensus> enumerate_matches(const AdjacencyMatrix& source,
                                             const AdjacencyMatrix& pattern,
                                             uint64_t cap) {
  check_instance(source, pattern);
  if (search_space_size(source.order(), pattern.order()) > BigInt(cap)) {
    return std::nullopt;
  }
  const int na = source.order();
  const int nb = pattern.order();
  MatchCensus census;

  // Odometer over injective tuples in lexicographic order; each complete
  // tuple is scored via partial_loss with no early exit.
  PartialPermutation w;
  w.source_order = na;
  w.image.assign(nb, -1);
  std::vector<bool> used(na, false);
  int depth = 0;
  while (depth >= 0) {
    if (depth == nb) {
      if (partial_loss(source, pattern, w) == 0) {
        ++census.total_matches;
        census.matches.push_back(w);
      }
      --depth;
      continue;
    }
    int v = w.image[depth];
    if (v >= 0) used[v] = false;
    ++v;
    while (v < na && used[v]) ++v;
    if (v == na) {
      w.image[depth] = -1;
      --depth;
      continue;
    }
    w.image[depth] = v;
    used[v] = true;
    ++depth;
    if (depth < nb) w.image[depth] = -1;
  }

  census.unique_solutions = count_unique_subsets(census.matches);
  return census;
}

std::vector<PartialPermutation> backtracking_match(const AdjacencyMatrix& source,
                                                   const AdjacencyMatrix& pattern) {
  check_instance(source, pattern);
  std::vector<PartialPermutation> out;
  std::vector<int> image;
  std::vector<bool> used(source.order(), false);
  image.reserve(pattern.order());
  backtrack(source, pattern, image, used, out);
  return out;
}

double closed_form_amplitude(const AdjacencyMatrix& source,
                             const AdjacencyMatrix& pattern,
                             const VertexPermutation& p) {
  if (p.size() != source.order()) {
    throw std::invalid_argument("permutation does not act on the source order");
  }
  check_instance(source, pattern);
  const int nb = pattern.order();
  const VertexPermutation inv = p.inverse();
  long long sum = 0;
  for (int i = 0; i < nb; ++i) {
    for (int j = 0; j < nb; ++j) {
      const bool mismatch = source.at(inv(i), inv(j)) != pattern.at(i, j);
      sum += mismatch ? -1 : 1;
    }
  }
  return 0.5 + 0.5 * static_cast<double>(sum) / (static_cast<double>(nb) * nb);
}

QubitRequirements qubit_requirements(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("vertex count out of range");
  }
  int k = 0;
  while ((1 << k) < n) ++k;
  return {2 * k + 1, n * n, n + 2, n * n};
}

}  // namespace qsi
