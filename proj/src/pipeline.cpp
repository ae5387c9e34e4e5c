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

#include "pipeline.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "encoding.hpp"
#include "errors.hpp"
#include "sbm.hpp"

namespace sketchsdp {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Stream tags under the pipeline seed.
enum : std::uint64_t { kStreamSample = 1, kStreamSolver = 2, kStreamFallback = 3, kStreamTies = 4 };

}  // namespace

std::string_view to_string(TieRule rule) noexcept {
  switch (rule) {
    case TieRule::kFail:
      return "fail";
    case TieRule::kToFirst:
      return "to-first";
    case TieRule::kRandom:
      return "random";
  }
  return "fail";
}

std::optional<TieRule> parse_tie_rule(std::string_view text) noexcept {
  if (text == "fail") return TieRule::kFail;
  if (text == "to-first" || text == "first") return TieRule::kToFirst;
  if (text == "random") return TieRule::kRandom;
  return std::nullopt;
}

VoteOutcome vote_extend(const Graph& graph, const VertexSet& side1, const VertexSet& side2, TieRule tie_rule,
                        Seed seed) {
  if (side1.empty() || side2.empty()) {
    throw EmptySideError("vote extension needs both sketch sides nonempty");
  }
  const std::size_t n = graph.num_vertices();
  std::vector<std::int8_t> side(n, 0);
  auto mark = [&](const VertexSet& set, std::int8_t s) {
    for (VertexId v : set) {
      auto idx = graph.index_of(v);
      if (!idx) throw InvalidArgument("sketch vertex " + std::to_string(v) + " not in graph");
      if (side[*idx] != 0) throw InvalidArgument("sketch sides overlap at vertex " + std::to_string(v));
      side[*idx] = s;
    }
  };
  mark(side1, 1);
  mark(side2, -1);

  Rng coin(seed);
  VoteOutcome out;
  std::vector<std::pair<VertexId, int>> assignment;
  assignment.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (side[i] != 0) {
      assignment.emplace_back(graph.label(i), side[i]);
      continue;
    }
    long long balance = 0;  // e(v, R1) - e(v, R2)
    for (std::uint32_t j : graph.neighbors(i)) balance += side[j];
    if (balance > 0) {
      assignment.emplace_back(graph.label(i), 1);
    } else if (balance < 0) {
      assignment.emplace_back(graph.label(i), -1);
    } else {
      switch (tie_rule) {
        case TieRule::kFail:
          out.unassigned.push_back(graph.label(i));
          break;
        case TieRule::kToFirst:
          assignment.emplace_back(graph.label(i), 1);
          break;
        case TieRule::kRandom:
          assignment.emplace_back(graph.label(i), coin.coin() ? 1 : -1);
          break;
      }
    }
  }
  out.partition = Partition(std::move(assignment));
  return out;
}

double auto_gamma(double alpha, double beta) {
  if (!(beta > 0.0) || !(alpha > beta)) throw InvalidArgument("auto gamma requires alpha > beta > 0");
  const double gap = std::sqrt(alpha) - std::sqrt(beta);
  return std::min(1.0, 4.0 / (gap * gap));
}

PipelineResult sketch_and_solve(const Graph& graph, const SketchConfig& config) {
  return sketch_and_solve(graph, config, [](const Graph& g, double mu, const SolverConfig& c) {
    return solve_sdp(g, mu, c);
  });
}

PipelineResult sketch_and_solve(const Graph& graph, const SketchConfig& config, const SdpSolveFn& solver) {
  PipelineResult result;
  if (config.gamma) {
    result.gamma_used = *config.gamma;
  } else {
    if (!config.signal) throw InvalidArgument("automatic gamma needs alpha and beta");
    result.gamma_used = auto_gamma(config.signal->alpha, config.signal->beta);
  }
  if (!(result.gamma_used > 0.0 && result.gamma_used <= 1.0)) throw InvalidArgument("gamma must lie in (0,1]");

  auto t = Clock::now();
  result.mu_used = config.mu ? *config.mu : estimate_mu(graph).mu;
  if (!(result.mu_used >= 0.0)) throw InvalidArgument("mu must be >= 0");
  result.timings.estimate_ms = elapsed_ms(t);

  t = Clock::now();
  result.sketch_vertices = result.gamma_used >= 1.0 ? graph.labels()
                                                    : bernoulli_vertex_sample(graph, result.gamma_used,
                                                                              derive_seed(config.seed, {kStreamSample}));
  const Graph sketch = result.gamma_used >= 1.0 ? graph : induced_subgraph(graph, result.sketch_vertices);
  result.timings.sample_ms = elapsed_ms(t);
  if (sketch.num_vertices() < 2) throw EmptySideError("sketch kept fewer than two vertices");

  t = Clock::now();
  SolverConfig solver_config = config.solver;
  solver_config.seed = derive_seed(config.seed, {kStreamSolver, config.solver.seed});
  result.sdp = solver(sketch, result.mu_used, solver_config);
  result.timings.solve_ms = elapsed_ms(t);

  bool accepted = result.sdp.rank_one_gap <= SketchConfig::kRankOneGapThreshold;
  if (config.certify) {
    t = Clock::now();
    result.certificate = check_certificate(sketch, result.sdp.rounded_cut, result.mu_used, config.certificate);
    result.timings.certify_ms = elapsed_ms(t);
    accepted = accepted && result.certificate->verdict == Verdict::kCertified;
  }

  if (accepted) {
    result.sketch_partition = result.sdp.rounded_cut;
  } else {
    result.fell_back_random = true;
    Rng coin(derive_seed(config.seed, {kStreamFallback}));
    std::vector<std::pair<VertexId, int>> assignment;
    assignment.reserve(result.sketch_vertices.size());
    for (VertexId v : result.sketch_vertices) assignment.emplace_back(v, coin.coin() ? 1 : -1);
    result.sketch_partition = Partition(std::move(assignment));
  }

  t = Clock::now();
  if (result.sketch_vertices.size() == graph.num_vertices()) {
    result.full_partition = result.sketch_partition;
  } else {
    VoteOutcome vote = vote_extend(graph, result.sketch_partition.side(1), result.sketch_partition.side(-1),
                                   config.tie_rule, derive_seed(config.seed, {kStreamTies}));
    result.full_partition = std::move(vote.partition);
    result.unassigned = std::move(vote.unassigned);
  }
  result.timings.extend_ms = elapsed_ms(t);

  if (result.full_partition.restricted_to(result.sketch_vertices) != result.sketch_partition) {
    throw std::logic_error("pipeline: full partition disagrees with the sketch partition");
  }
  return result;
}

PipelineResult full_solve(const Graph& graph, std::optional<double> mu, const SolverConfig& solver, bool certify) {
  SketchConfig config;
  config.gamma = 1.0;
  config.mu = mu;
  config.solver = solver;
  config.seed = solver.seed;
  config.certify = certify;
  return sketch_and_solve(graph, config);
}

bool recovers(const PipelineResult& result, const Partition& planted) {
  return result.unassigned.empty() && same_up_to_flip(result.full_partition, planted);
}

}  // namespace sketchsdp
