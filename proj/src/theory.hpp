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
#include <string_view>
#include <utility>
#include <vector>

namespace sketchsdp {

// Phase of the balanced two-community SBM with p = alpha ln n / n,
// q = beta ln n / n: exact recovery is possible iff sqrt(alpha) - sqrt(beta)
// exceeds sqrt(2).
enum class Phase { kRecoverable, kImpossible, kBoundary };

std::string_view to_string(Phase phase) noexcept;

inline constexpr double kPhaseBoundaryTolerance = 1e-12;

Phase prop1_phase(double alpha, double beta);

// Sampling rate above which majority vote from true sketch communities
// recovers everything: (8/3)(2 alpha + beta) / (alpha - beta)^2.
double lemma2_gamma_threshold(double alpha, double beta);

// Rate sufficient for the full sketch-and-solve guarantee: twice the above.
double theorem6_gamma_threshold(double alpha, double beta);

// Conjectured sharp sketching rate 2 / (sqrt(alpha) - sqrt(beta))^2.
double conjecture_gamma_threshold(double alpha, double beta);

// Lower bound on the probability that gg^T uniquely solves the (A, mu)-SDP
// for the planted cut of SBM(n1, n2, p, q). Two regimes split at
// mu = (p+q)/2. Returned un-clamped; negative values mean the bound is
// vacuous.
double lemma4_success_bound(std::size_t n1, std::size_t n2, double p, double q, double mu);

// 3 (alpha - beta)^2 > 16 (2 alpha + beta) + 24 (alpha - beta) delta, for
// communities of sizes (1 +- delta) n / 2 in the log-scaled regime.
bool corollary5_condition(double alpha, double beta, double delta);

struct ThresholdReport {
  double alpha = 0.0;
  double beta = 0.0;
  Phase phase = Phase::kImpossible;
  bool prop1_recoverable = false;
  double lemma2_gamma = 0.0;
  double theorem6_gamma = 0.0;
  double conjecture_gamma = 0.0;
  std::optional<double> delta;
  std::optional<bool> corollary5_holds;
};

ThresholdReport threshold_report(double alpha, double beta, std::optional<double> delta = std::nullopt);

// alpha on the phase-transition curve for the given beta: (sqrt(beta) + sqrt(2))^2.
double prop1_curve_alpha(double beta);

// alpha where the conjectured sketching threshold equals gamma:
// (sqrt(beta) + sqrt(2 / gamma))^2.
double conjecture_iso_alpha(double beta, double gamma);

// `count` evenly spaced betas over [beta_min, beta_max] (endpoints included)
// paired with prop1_curve_alpha.
std::vector<std::pair<double, double>> prop1_curve(double beta_min, double beta_max, std::size_t count);

}  // namespace sketchsdp
