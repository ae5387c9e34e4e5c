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
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "graph.hpp"
#include "rng.hpp"

namespace sketchsdp {

enum class Rounding { kTopEigenvector };

struct SolverConfig {
  std::optional<std::size_t> rank;  // nullopt = auto
  std::size_t max_sweeps = 5000;
  double objective_tolerance = 1e-12;
  Rounding rounding = Rounding::kTopEigenvector;
  Seed seed = 0;

  void validate() const;
};

// min(n, ceil(sqrt(2n)) + 1), or the explicit rank capped at n.
std::size_t resolve_rank(const SolverConfig& config, std::size_t n);

struct SdpSolution {
  // r x n; column i is the unit vector v_i, so X_ij = <v_i, v_j>.
  Eigen::MatrixXd factors;
  double objective = 0.0;
  Partition rounded_cut;      // canonical: smallest id on +1
  double rank_one_gap = 1.0;  // 1 - lambda_1(X)/n
  std::size_t sweeps_used = 0;
  bool converged = false;
  // Objective after initialization and after every sweep.
  std::vector<double> objective_trace;
};

// tr((A - mu J) X) for X = V^T V, computed from the factors.
double objective_from_factors(const Graph& graph, double mu, const Eigen::MatrixXd& factors);

// Fills objective, rounding and rank-one gap for a given factor matrix.
SdpSolution make_solution(const Graph& graph, double mu, Eigen::MatrixXd factors,
                          std::size_t sweeps_used, bool converged);

/// Maximizes tr((A - mu J) X) subject to diag(X) = 1, X psd.
///
/// Low-rank coordinate ascent on unit-norm columns (Gauss-Seidel order
/// i = 0..n-1). Each step sets v_i to the normalized direction of
/// sum_{j != i} C_ij v_j, which maximizes the objective in v_i with the other
/// columns fixed, so the objective never decreases. Stops when a sweep gains
/// less than objective_tolerance * (1 + |objective|).
SdpSolution solve_sdp(const Graph& graph, double mu, const SolverConfig& config);

// g^T A g - mu (1^T g)^2 for g the partition's sign vector on this graph.
double objective_value(const Graph& graph, double mu, const Partition& partition);

struct BruteForceResult {
  Partition partition;
  double value = 0.0;
};

inline constexpr std::size_t kBruteForceMaxVertices = 24;

// Exhaustive maximization of g^T A g - mu (1^T g)^2 over sign vectors (only
// balanced ones when requested). Ties resolve to the lexicographically
// smallest g with g_0 = +1 (ordering -1 < +1).
BruteForceResult brute_force_max(const Graph& graph, double mu, bool balanced_only);

}  // namespace sketchsdp
