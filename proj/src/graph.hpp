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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sketchsdp {

// Original vertex label. Stable under induced subgraphs.
using VertexId = std::uint32_t;
// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<VertexId>;

struct Edge {
  std::uint32_t u;  // local index, u < v
  std::uint32_t v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph.
///
/// Vertices are addressed by a local index 0..n-1 and carry an original label
/// (vertex id). Neighbor lists hold local indices sorted ascending; the edge
/// list is sorted lexicographically with u < v.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on n vertices labeled 0..n-1. Edges may be given in either
  // orientation; self-loops and duplicates are rejected.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  // As above with explicit labels (must be strictly increasing).
  static Graph from_edges(std::vector<VertexId> labels, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const std::uint32_t> neighbors(std::size_t i) const noexcept {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  std::size_t degree(std::size_t i) const noexcept { return offsets_[i + 1] - offsets_[i]; }
  std::size_t max_degree() const noexcept;

  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(std::size_t i, std::size_t j) const noexcept;

  VertexId label(std::size_t i) const noexcept { return labels_[i]; }
  const std::vector<VertexId>& labels() const noexcept { return labels_; }
  // Local index of a label, if present.
  std::optional<std::size_t> index_of(VertexId id) const noexcept;
  // True when labels are exactly 0..n-1, so label == index.
  bool identity_labels() const noexcept { return identity_labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> adjacency_;
  bool identity_labels_ = true;
};

/// Two-coloring of a vertex set, keyed by vertex id.
class Partition {
 public:
  Partition() = default;
  // Pairs may come in any order; duplicate ids are rejected, signs must be +-1.
  explicit Partition(std::vector<std::pair<VertexId, int>> assignment);
  // Partition of the graph's vertices from a sign vector aligned to local
  // indices. Non-negative entries map to +1.
  static Partition from_signs(const Graph& graph, std::span<const double> signs);
  static Partition from_signs(const Graph& graph, std::span<const std::int8_t> signs);
  // Sides given as two disjoint vertex sets: S1 -> +1, S2 -> -1.
  static Partition from_sides(const VertexSet& side1, const VertexSet& side2);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const std::vector<VertexId>& vertices() const noexcept { return ids_; }
  const std::vector<std::int8_t>& signs() const noexcept { return signs_; }
  std::optional<int> side_of(VertexId id) const noexcept;
  bool contains(VertexId id) const noexcept { return side_of(id).has_value(); }

  VertexSet side(int sign) const;
  // Sign vector aligned to the graph's local indices. Throws if a vertex of
  // the graph is missing.
  std::vector<std::int8_t> sign_vector(const Graph& graph) const;
  // Restriction to the given ids (all must be present).
  Partition restricted_to(const VertexSet& ids) const;
  // Flip all signs.
  Partition flipped() const;
  // Flip if needed so the smallest id is on the +1 side.
  Partition canonical() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<VertexId> ids_;    // sorted
  std::vector<std::int8_t> signs_;
};

// True when both partitions cover the same ids and agree up to a global flip.
bool same_up_to_flip(const Partition& a, const Partition& b);

// Sorted and de-duplicated copy.
VertexSet make_vertex_set(std::vector<VertexId> ids);

// Subgraph on the given vertex ids (subset of the graph's labels), keeping
// exactly the edges with both endpoints inside. Labels are preserved.
Graph induced_subgraph(const Graph& graph, const VertexSet& vertices);

// Number of neighbors of `v` inside S. Self never counts.
std::size_t edges_to_set(const Graph& graph, VertexId v, const VertexSet& set);

}  // namespace sketchsdp
