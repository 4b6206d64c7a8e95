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

#include "qsi/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qsi {

namespace {

using nlohmann::json;

Graph graph_from_json_value(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw std::invalid_argument("graph JSON needs fields \"n\" and \"edges\"");
  }
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("graph JSON edge must be a pair");
    }
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

Graph graph_from_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  int max_vertex = -1;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    const size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    int u, v;
    if (!(fields >> u >> v)) {
      throw std::invalid_argument("edge list line is not \"u v\": " + line);
    }
    pairs.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  Graph g(max_vertex + 1);
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  return g;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') {
    return graph_from_json_value(json::parse(text));
  }
  return graph_from_edge_list(text);
}

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  const json j{{"n", g.num_vertices}, {"edges", edges}};
  return j.dump(2) + "\n";
}

std::string graph_to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph read_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

void write_graph(const Graph& g, const std::string& path) {
  write_text_file(path,
                  ends_with(path, ".json") ? graph_to_json(g) : graph_to_edge_list(g));
}

std::string topology_to_json(const AnsatzTopology& topology) {
  topology.validate();
  if (topology.parameter_count() % 5 != 0) {
    throw std::invalid_argument("topology does not decompose into five-primitive blocks");
  }
  json blocks = json::array();
  bool circular = true;
  const int k = topology.register_width;
  const int num_blocks = topology.parameter_count() / 5;
  for (int b = 0; b < num_blocks; ++b) {
    const PrimitiveSpec* p = &topology.primitives[static_cast<size_t>(b) * 5];
    const int qa = p[0].qubit_a;
    const int qb = p[1].qubit_a;
    const bool shape_ok =
        p[0].kind == PrimitiveSpec::Kind::NonEntangling &&
        p[1].kind == PrimitiveSpec::Kind::NonEntangling &&
        p[2] == PrimitiveSpec::entangling(qa, qb, p[2].direction) &&
        p[3] == PrimitiveSpec::entangling(qa, qb, p[3].direction) &&
        p[4] == PrimitiveSpec::entangling(qa, qb, p[4].direction);
    if (!shape_ok) {
      throw std::invalid_argument("topology does not decompose into five-primitive blocks");
    }
    blocks.push_back({{"qubits", {qa, qb}},
                      {"directions", {p[2].direction, p[3].direction, p[4].direction}}});
    circular = circular && qa == b && qb == (b + 1) % k &&
               p[2].direction == 0 && p[3].direction == 1 && p[4].direction == 0;
  }
  circular = circular && num_blocks == k;
  const json j{{"kind", circular ? "circular" : "custom"},
               {"register_width", k},
               {"blocks", blocks}};
  return j.dump(2) + "\n";
}

AnsatzTopology topology_from_json(std::string_view text) {
  const json j = json::parse(text);
  AnsatzTopology topology;
  topology.register_width = j.at("register_width").get<int>();
  for (const auto& b : j.at("blocks")) {
    const auto& qubits = b.at("qubits");
    const auto& dirs = b.at("directions");
    if (qubits.size() != 2 || dirs.size() != 3) {
      throw std::invalid_argument("topology block needs two qubits and three directions");
    }
    const auto primitives =
        block(qubits[0].get<int>(), qubits[1].get<int>(),
              {dirs[0].get<int>(), dirs[1].get<int>(), dirs[2].get<int>()});
    topology.primitives.insert(topology.primitives.end(), primitives.begin(),
                               primitives.end());
  }
  topology.validate();
  return topology;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string fnv1a_hex(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace qsi
