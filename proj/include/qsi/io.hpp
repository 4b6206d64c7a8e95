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

#ifndef QSI_IO_HPP_
#define QSI_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "qsi/ansatz.hpp"
#include "qsi/graph.hpp"

namespace qsi {

/// Parses either format: JSON {"n": ..., "edges": [[u, v], ...]} when the
/// text starts with '{', otherwise an edge list with one "u v" pair per line
/// ('#' lines are comments; the vertex count is the largest endpoint + 1).
Graph parse_graph(std::string_view text);

std::string graph_to_json(const Graph& g);
std::string graph_to_edge_list(const Graph& g);

Graph read_graph(const std::string& path);
/// Writes JSON when the path ends in ".json", else the edge-list format.
void write_graph(const Graph& g, const std::string& path);

/// Topology as JSON: kind, register width, block qubit pairs and the
/// entangling direction pattern of each block.
std::string topology_to_json(const AnsatzTopology& topology);
AnsatzTopology topology_from_json(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

/// FNV-1a 64-bit hash as fixed-width hex; used to fingerprint manifests.
std::string fnv1a_hex(std::string_view data);

/// Shortest-roundtrip-safe decimal formatting used by all CSV writers.
std::string format_double(double value);

}  // namespace qsi

#endif  // QSI_IO_HPP_
