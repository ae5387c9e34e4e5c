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

#include "sdp.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "errors.hpp"

namespace sketchsdp {

namespace {

constexpr double kStallNorm = 1e-14;

}  // namespace

void SolverConfig::validate() const {
  if (rank && *rank == 0) throw InvalidArgument("solver rank must be positive");
  if (max_sweeps == 0) throw InvalidArgument("max_sweeps must be positive");
  if (!(objective_tolerance > 0.0)) throw InvalidArgument("objective_tolerance must be positive");
}

std::size_t resolve_rank(const SolverConfig& config, std::size_t n) {
  if (config.rank) return std::max<std::size_t>(1, std::min(*config.rank, n));
  const auto r = static_cast<std::size_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(n)))) + 1;
  return std::max<std::size_t>(1, std::min(n, r));
}

double objective_from_factors(const Graph& graph, double mu, const Eigen::MatrixXd& factors) {
  if (static_cast<std::size_t>(factors.cols()) != graph.num_vertices()) {
    throw InvalidArgument("factor matrix has wrong number of columns");
  }
  double quad = 0.0;
  for (const Edge& e : graph.edges()) quad += factors.col(e.u).dot(factors.col(e.v));
  const Eigen::VectorXd s = factors.rowwise().sum();
  return 2.0 * quad - mu * s.squaredNorm();
}

SdpSolution make_solution(const Graph& graph, double mu, Eigen::MatrixXd factors,
                          std::size_t sweeps_used, bool converged) {
  const std::size_t n = graph.num_vertices();
  SdpSolution sol;
  sol.objective = objective_from_factors(graph, mu, factors);
  sol.sweeps_used = sweeps_used;
  sol.converged = converged;

  // Top eigenpair of X = V^T V through the r x r Gram matrix V V^T.
  const Eigen::MatrixXd gram = factors * factors.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  const Eigen::Index top = gram.rows() - 1;
  const double lambda1 = eig.eigenvalues()(top);
  const Eigen::VectorXd direction = factors.transpose() * eig.eigenvectors().col(top);
  sol.rank_one_gap = std::clamp(1.0 - lambda1 / static_cast<double>(n), 0.0, 1.0);

  std::vector<std::int8_t> signs(n);
  for (std::size_t i = 0; i < n; ++i) signs[i] = direction(static_cast<Eigen::Index>(i)) >= 0.0 ? 1 : -1;
  sol.rounded_cut = Partition::from_signs(graph, std::span<const std::int8_t>(signs)).canonical();
  sol.factors = std::move(factors);
  return sol;
}

SdpSolution solve_sdp(const Graph& graph, double mu, const SolverConfig& config) {
  config.validate();
  const std::size_t n = graph.num_vertices();
  if (n < 2) throw InvalidArgument("solve_sdp requires at least 2 vertices");
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw InvalidArgument("mu must be a finite value >= 0");
  const auto r = static_cast<Eigen::Index>(resolve_rank(config, n));
  const auto cols = static_cast<Eigen::Index>(n);

  Rng rng(config.seed);
  Eigen::MatrixXd v(r, cols);
  for (Eigen::Index i = 0; i < cols; ++i) {
    double norm = 0.0;
    do {
      for (Eigen::Index k = 0; k < r; ++k) v(k, i) = rng.normal();
      norm = v.col(i).norm();
    } while (norm < 1e-8);
    v.col(i) /= norm;
  }

  std::vector<double> trace;
  double objective = objective_from_factors(graph, mu, v);
  trace.push_back(objective);

  Eigen::VectorXd total = v.rowwise().sum();
  Eigen::VectorXd c(r);
  bool converged = false;
  std::size_t sweep = 0;
  while (sweep < config.max_sweeps) {
    ++sweep;
    for (Eigen::Index i = 0; i < cols; ++i) {
      // c_i = sum_{j != i} C_ij v_j with C = A - mu J.
      c.setZero();
      for (std::uint32_t j : graph.neighbors(static_cast<std::size_t>(i))) c += v.col(j);
      c.noalias() -= mu * (total - v.col(i));
      const double norm = c.norm();
      if (norm < kStallNorm) continue;
      total -= v.col(i);
      v.col(i) = c / norm;
      total += v.col(i);
    }
    total = v.rowwise().sum();
    const double next = objective_from_factors(graph, mu, v);
    const double gain = next - objective;
    assert(gain >= -1e-9 * (1.0 + std::abs(objective)));
    objective = next;
    trace.push_back(objective);
    if (gain < config.objective_tolerance * (1.0 + std::abs(objective))) {
      converged = true;
      break;
    }
  }

  SdpSolution sol = make_solution(graph, mu, std::move(v), sweep, converged);
  sol.objective_trace = std::move(trace);
  return sol;
}

double objective_value(const Graph& graph, double mu, const Partition& partition) {
  const std::vector<std::int8_t> g = partition.sign_vector(graph);
  long long quad = 0;
  long long s = 0;
  for (const Edge& e : graph.edges()) quad += 2LL * g[e.u] * g[e.v];
  for (std::int8_t x : g) s += x;
  return static_cast<double>(quad) - mu * static_cast<double>(s * s);
}

BruteForceResult brute_force_max(const Graph& graph, double mu, bool balanced_only) {
  const std::size_t n = graph.num_vertices();
  if (n == 0) throw InvalidArgument("brute_force_max needs at least one vertex");
  if (n > kBruteForceMaxVertices) throw InvalidArgument("brute_force_max is limited to 24 vertices");
  if (balanced_only && n % 2 != 0) throw InvalidArgument("balanced enumeration needs an even vertex count");

  // Gray-code walk over g_1..g_{n-1} with g_0 = +1 fixed; the objective is
  // invariant under a global flip.
  std::vector<std::int8_t> g(n, 1);
  long long quad = 2LL * static_cast<long long>(graph.edge_count());
  long long sum = static_cast<long long>(n);

  std::vector<std::int8_t> best;
  double best_value = 0.0;
  auto consider = [&] {
    if (balanced_only && sum != 0) return;
    const double value = static_cast<double>(quad) - mu * static_cast<double>(sum * sum);
    const double tie_tol = 1e-9 * (1.0 + std::abs(value));
    if (best.empty() || value > best_value + tie_tol) {
      best = g;
      best_value = value;
    } else if (std::abs(value - best_value) <= tie_tol && std::lexicographical_compare(g.begin(), g.end(), best.begin(), best.end())) {
      best = g;
      best_value = value;
    }
  };

  consider();
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t k = 1; k < steps; ++k) {
    const std::size_t flip = 1 + static_cast<std::size_t>(std::countr_zero(k));
    long long nb = 0;
    for (std::uint32_t j : graph.neighbors(flip)) nb += g[j];
    quad -= 4LL * g[flip] * nb;
    sum -= 2LL * g[flip];
    g[flip] = static_cast<std::int8_t>(-g[flip]);
    consider();
  }

  BruteForceResult out;
  out.partition = Partition::from_signs(graph, std::span<const std::int8_t>(best));
  out.value = best_value;
  return out;
}

}  // namespace sketchsdp
