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

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "certificate.hpp"
#include "graph.hpp"
#include "rng.hpp"
#include "sdp.hpp"

namespace sketchsdp {

enum class TieRule { kFail, kToFirst, kRandom };

std::string_view to_string(TieRule rule) noexcept;
std::optional<TieRule> parse_tie_rule(std::string_view text) noexcept;

struct VoteOutcome {
  Partition partition;         // R1 -> +1, R2 -> -1, plus every assigned vertex
  std::vector<VertexId> unassigned;  // ties left open under TieRule::kFail
};

/// Majority-vote extension: every vertex outside R1 u R2 joins the side it
/// has strictly more edges to. Ties follow `tie_rule` (kRandom flips a coin
/// drawn from `seed`, in vertex order).
VoteOutcome vote_extend(const Graph& graph, const VertexSet& side1, const VertexSet& side2, TieRule tie_rule,
                        Seed seed = 0);

// min{1, 4 / (sqrt(alpha) - sqrt(beta))^2}. Requires alpha > beta > 0.
double auto_gamma(double alpha, double beta);

struct SignalStrength {
  double alpha = 0.0;
  double beta = 0.0;
};

struct SketchConfig {
  std::optional<double> gamma;           // nullopt = auto (needs `signal`)
  std::optional<SignalStrength> signal;  // for auto gamma
  std::optional<double> mu;              // nullopt = estimate on the full graph
  Seed seed = 0;
  SolverConfig solver;
  bool certify = true;
  TieRule tie_rule = TieRule::kFail;
  CertificateTolerances certificate;

  // Rank-one gap threshold for accepting the sketch SDP solution as a cut.
  static constexpr double kRankOneGapThreshold = 1e-6;
};

struct StageTimings {
  double estimate_ms = 0.0;
  double sample_ms = 0.0;
  double solve_ms = 0.0;
  double certify_ms = 0.0;
  double extend_ms = 0.0;

  // The cost attributed to the clustering method itself.
  double method_ms() const noexcept { return solve_ms + certify_ms + extend_ms; }
  double total_ms() const noexcept { return estimate_ms + sample_ms + method_ms(); }
};

struct PipelineResult {
  Partition full_partition;  // assigned vertices only when ties were left open
  VertexSet sketch_vertices;
  Partition sketch_partition;
  double gamma_used = 0.0;
  double mu_used = 0.0;
  SdpSolution sdp;
  std::optional<CertificateReport> certificate;
  bool fell_back_random = false;
  std::vector<VertexId> unassigned;
  StageTimings timings;
};

// Hook for replacing the SDP solver (used to exercise the fallback path).
using SdpSolveFn = std::function<SdpSolution(const Graph&, double, const SolverConfig&)>;

/// Sketch-and-solve clustering.
///
/// mu is fixed on the full graph before sketching. The sketch SDP's rounded
/// cut is kept only if its rank-one gap is below kRankOneGapThreshold and (if
/// certify is set) the dual certificate verifies it; otherwise the sketch is
/// split by independent fair coins. The sketch partition is then extended to
/// every other vertex by vote_extend.
PipelineResult sketch_and_solve(const Graph& graph, const SketchConfig& config);
PipelineResult sketch_and_solve(const Graph& graph, const SketchConfig& config, const SdpSolveFn& solver);

// Unsketched baseline: sketch_and_solve with gamma = 1.
PipelineResult full_solve(const Graph& graph, std::optional<double> mu, const SolverConfig& solver,
                          bool certify = true);

// True when `result` assigns every vertex and matches `planted` up to a flip.
bool recovers(const PipelineResult& result, const Partition& planted);

}  // namespace sketchsdp
