// Copyright 2026 The sketchsdp Authors.
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

#include "graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace sketchsdp {

namespace {

// Splits a line into whitespace-separated tokens after stripping comments.
std::vector<std::string_view> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T parse_int(std::string_view s, std::size_t line) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer '" + std::string(s) + "'", line);
  return v;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!n) {
      if (tok.size() != 2 || tok[0] != "n") throw ParseError("expected header 'n <num_vertices>'", lineno);
      n = parse_int<std::size_t>(tok[1], lineno);
      continue;
    }
    if (tok.size() != 2) throw ParseError("expected 'u v'", lineno);
    const auto u = parse_int<std::uint32_t>(tok[0], lineno);
    const auto v = parse_int<std::uint32_t>(tok[1], lineno);
    if (u >= *n || v >= *n) throw ParseError("vertex out of range", lineno);
    if (u == v) throw ParseError("self-loop", lineno);
    edges.push_back({u, v});
  }
  if (!n) throw ParseError("missing header 'n <num_vertices>'", lineno);
  try {
    return Graph::from_edges(*n, edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), lineno);
  }
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  if (!graph.identity_labels()) throw InvalidArgument("edge-list output needs vertex labels 0..n-1");
  out << "n " << graph.num_vertices() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_edge_list(const Graph& graph, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_edge_list(out, graph);
  if (!out) throw IoError("write failed for '" + path + "'");
}

Partition read_partition(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<VertexId, int>> assignment;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError("expected 'vertex sign'", lineno);
    const auto v = parse_int<VertexId>(tok[0], lineno);
    const int s = parse_int<int>(tok[1], lineno);
    if (s != 1 && s != -1) throw ParseError("sign must be +1 or -1", lineno);
    assignment.emplace_back(v, s);
  }
  try {
    return Partition(std::move(assignment));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), lineno);
  }
}

Partition load_partition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open partition file '" + path + "'");
  return read_partition(in);
}

void write_partition(std::ostream& out, const Partition& partition) {
  for (std::size_t i = 0; i < partition.size(); ++i) {
    out << partition.vertices()[i] << ' ' << (partition.signs()[i] > 0 ? "+1" : "-1") << '\n';
  }
}

void save_partition(const Partition& partition, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_partition(out, partition);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace sketchsdp
