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

// Test-only reference computations. Everything here works from the raw edge
// list with dense matrices or plain enumeration and shares no code path with
// the library internals it is used to check.

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graph.hpp"
#include "rng.hpp"

namespace oracle {

inline Eigen::MatrixXd dense_adjacency(const sketchsdp::Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  return a;
}

inline Eigen::MatrixXd dense_objective(const sketchsdp::Graph& g, double mu) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  return dense_adjacency(g) - mu * Eigen::MatrixXd::Ones(n, n);
}

inline Eigen::VectorXd signs(const std::vector<std::int8_t>& g) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) v(static_cast<Eigen::Index>(i)) = g[i];
  return v;
}

// Z = D+ - D- - mu (n1 - n2) diag(g) - A + mu J, entry by entry.
inline Eigen::MatrixXd dense_certificate(const sketchsdp::Graph& graph, const std::vector<std::int8_t>& g, double mu) {
  const auto n = static_cast<Eigen::Index>(graph.num_vertices());
  const Eigen::MatrixXd a = dense_adjacency(graph);
  double n1 = 0, n2 = 0;
  for (auto s : g) (s > 0 ? n1 : n2) += 1;
  Eigen::MatrixXd z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double dplus = 0, dminus = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (a(i, j) == 0.0) continue;
      (g[static_cast<std::size_t>(i)] == g[static_cast<std::size_t>(j)] ? dplus : dminus) += 1;
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      z(i, j) = -a(i, j) + mu;
      if (i == j) z(i, j) += dplus - dminus - mu * (n1 - n2) * g[static_cast<std::size_t>(i)];
    }
  }
  return z;
}

inline Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& m) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues();
}

struct Best {
  std::vector<std::vector<int>> maximizers;  // all sign vectors attaining max (both flips)
  double value = 0.0;
};

// Plain enumeration of all 2^n sign vectors, objective via dense quadratic form.
inline Best enumerate_max(const sketchsdp::Graph& graph, double mu, bool balanced_only) {
  const std::size_t n = graph.num_vertices();
  const Eigen::MatrixXd c = dense_objective(graph, mu);
  Best best;
  bool first = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(n));
    std::vector<int> g(n);
    int sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = (mask >> i) & 1 ? -1 : 1;
      x(static_cast<Eigen::Index>(i)) = g[i];
      sum += g[i];
    }
    if (balanced_only && sum != 0) continue;
    const double v = x.dot(c * x);
    if (first || v > best.value + 1e-9) {
      best.value = v;
      best.maximizers = {g};
      first = false;
    } else if (std::abs(v - best.value) <= 1e-9) {
      best.maximizers.push_back(g);
    }
  }
  return best;
}

// Erdos-Renyi graph on n vertices.
inline sketchsdp::Graph random_graph(std::size_t n, double p, sketchsdp::Rng& rng) {
  std::vector<sketchsdp::Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.push_back({i, j});
  return sketchsdp::Graph::from_edges(n, edges);
}

inline sketchsdp::Graph two_triangles() {
  const std::vector<sketchsdp::Edge> e{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  return sketchsdp::Graph::from_edges(6, e);
}

inline sketchsdp::Graph complete(std::size_t n) {
  std::vector<sketchsdp::Edge> e;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return sketchsdp::Graph::from_edges(n, e);
}

inline sketchsdp::Graph path(std::size_t n) {
  std::vector<sketchsdp::Edge> e;
  for (std::uint32_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return sketchsdp::Graph::from_edges(n, e);
}

inline sketchsdp::Partition halves(std::size_t n) {
  std::vector<std::pair<sketchsdp::VertexId, int>> a;
  for (std::uint32_t i = 0; i < n; ++i) a.emplace_back(i, i < n / 2 ? 1 : -1);
  return sketchsdp::Partition(a);
}

}  // namespace oracle
