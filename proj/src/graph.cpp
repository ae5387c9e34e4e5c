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

#include "graph.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace sketchsdp {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<VertexId> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<VertexId>(i);
  return from_edges(std::move(labels), edges);
}

Graph Graph::from_edges(std::vector<VertexId> labels, std::span<const Edge> edges) {
  Graph g;
  const std::size_t n = labels.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (labels[i] <= labels[i - 1]) throw InvalidArgument("vertex labels must be strictly increasing");
  }
  g.identity_labels_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != i) {
      g.identity_labels_ = false;
      break;
    }
  }
  g.labels_ = std::move(labels);

  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                            std::to_string(e.v));
    }
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end()) {
    throw InvalidArgument("duplicate edge");
  }

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted, so appending in edge order leaves each list sorted only
  // for the larger endpoint; sort afterwards.
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t i = 0; i < num_vertices(); ++i) best = std::max(best, degree(i));
  return best;
}

bool Graph::has_edge(std::size_t i, std::size_t j) const noexcept {
  if (i >= num_vertices() || j >= num_vertices()) return false;
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(j));
}

std::optional<std::size_t> Graph::index_of(VertexId id) const noexcept {
  if (identity_labels_) {
    if (id < labels_.size()) return id;
    return std::nullopt;
  }
  auto it = std::lower_bound(labels_.begin(), labels_.end(), id);
  if (it == labels_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Partition::Partition(std::vector<std::pair<VertexId, int>> assignment) {
  std::sort(assignment.begin(), assignment.end());
  ids_.reserve(assignment.size());
  signs_.reserve(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const auto& [id, s] = assignment[i];
    if (i > 0 && assignment[i - 1].first == id) {
      throw InvalidArgument("vertex " + std::to_string(id) + " assigned twice");
    }
    if (s != 1 && s != -1) throw InvalidArgument("partition signs must be +1 or -1");
    ids_.push_back(id);
    signs_.push_back(static_cast<std::int8_t>(s));
  }
}

Partition Partition::from_signs(const Graph& graph, std::span<const double> signs) {
  if (signs.size() != graph.num_vertices()) throw InvalidArgument("sign vector length mismatch");
  Partition p;
  p.ids_ = graph.labels();
  p.signs_.resize(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) p.signs_[i] = signs[i] >= 0.0 ? 1 : -1;
  return p;
}

Partition Partition::from_signs(const Graph& graph, std::span<const std::int8_t> signs) {
  if (signs.size() != graph.num_vertices()) throw InvalidArgument("sign vector length mismatch");
  Partition p;
  p.ids_ = graph.labels();
  p.signs_.resize(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) p.signs_[i] = signs[i] >= 0 ? 1 : -1;
  return p;
}

Partition Partition::from_sides(const VertexSet& side1, const VertexSet& side2) {
  std::vector<std::pair<VertexId, int>> a;
  a.reserve(side1.size() + side2.size());
  for (VertexId v : side1) a.emplace_back(v, 1);
  for (VertexId v : side2) a.emplace_back(v, -1);
  return Partition(std::move(a));
}

std::optional<int> Partition::side_of(VertexId id) const noexcept {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return signs_[static_cast<std::size_t>(it - ids_.begin())];
}

VertexSet Partition::side(int sign) const {
  VertexSet out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (signs_[i] == sign) out.push_back(ids_[i]);
  }
  return out;
}

std::vector<std::int8_t> Partition::sign_vector(const Graph& graph) const {
  std::vector<std::int8_t> g(graph.num_vertices());
  if (graph.labels() == ids_) return signs_;
  for (std::size_t i = 0; i < graph.num_vertices(); ++i) {
    auto s = side_of(graph.label(i));
    if (!s) throw InvalidArgument("partition does not cover vertex " + std::to_string(graph.label(i)));
    g[i] = static_cast<std::int8_t>(*s);
  }
  return g;
}

Partition Partition::restricted_to(const VertexSet& ids) const {
  Partition p;
  p.ids_.reserve(ids.size());
  p.signs_.reserve(ids.size());
  for (VertexId id : ids) {
    auto s = side_of(id);
    if (!s) throw InvalidArgument("vertex " + std::to_string(id) + " not in partition");
    p.ids_.push_back(id);
    p.signs_.push_back(static_cast<std::int8_t>(*s));
  }
  return p;
}

Partition Partition::flipped() const {
  Partition p = *this;
  for (auto& s : p.signs_) s = static_cast<std::int8_t>(-s);
  return p;
}

Partition Partition::canonical() const {
  if (!signs_.empty() && signs_.front() < 0) return flipped();
  return *this;
}

bool same_up_to_flip(const Partition& a, const Partition& b) {
  if (a.vertices() != b.vertices()) return false;
  return a.signs() == b.signs() || a.flipped().signs() == b.signs();
}

VertexSet make_vertex_set(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

Graph induced_subgraph(const Graph& graph, const VertexSet& vertices) {
  const std::size_t n = graph.num_vertices();
  constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
  std::vector<std::uint32_t> local(n, kAbsent);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (k > 0 && vertices[k] <= vertices[k - 1]) throw InvalidArgument("vertex set must be sorted and unique");
    auto idx = graph.index_of(vertices[k]);
    if (!idx) throw InvalidArgument("vertex " + std::to_string(vertices[k]) + " not in graph");
    local[*idx] = static_cast<std::uint32_t>(k);
  }
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (local[e.u] != kAbsent && local[e.v] != kAbsent) edges.push_back({local[e.u], local[e.v]});
  }
  return Graph::from_edges(vertices, edges);
}

std::size_t edges_to_set(const Graph& graph, VertexId v, const VertexSet& set) {
  auto idx = graph.index_of(v);
  if (!idx) throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
  std::size_t count = 0;
  for (std::uint32_t j : graph.neighbors(*idx)) {
    if (std::binary_search(set.begin(), set.end(), graph.label(j))) ++count;
  }
  return count;
}

}  // namespace sketchsdp
