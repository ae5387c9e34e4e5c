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

#include "theory.hpp"

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace sketchsdp {

namespace {

void require_strict(double alpha, double beta) {
  if (!(beta > 0.0) || !(alpha > beta)) throw InvalidArgument("requires alpha > beta > 0");
}

}  // namespace

std::string_view to_string(Phase phase) noexcept {
  switch (phase) {
    case Phase::kRecoverable:
      return "RECOVERABLE";
    case Phase::kImpossible:
      return "IMPOSSIBLE";
    case Phase::kBoundary:
      return "BOUNDARY";
  }
  return "IMPOSSIBLE";
}

Phase prop1_phase(double alpha, double beta) {
  if (!(beta > 0.0) || !(alpha >= beta)) throw InvalidArgument("requires alpha >= beta > 0");
  const double gap = std::sqrt(alpha) - std::sqrt(beta) - std::numbers::sqrt2;
  if (std::abs(gap) <= kPhaseBoundaryTolerance) return Phase::kBoundary;
  return gap > 0.0 ? Phase::kRecoverable : Phase::kImpossible;
}

double lemma2_gamma_threshold(double alpha, double beta) {
  require_strict(alpha, beta);
  const double d = alpha - beta;
  return 8.0 * (2.0 * alpha + beta) / (3.0 * d * d);
}

double theorem6_gamma_threshold(double alpha, double beta) {
  require_strict(alpha, beta);
  const double d = alpha - beta;
  return 16.0 * (2.0 * alpha + beta) / (3.0 * d * d);
}

double conjecture_gamma_threshold(double alpha, double beta) {
  require_strict(alpha, beta);
  const double gap = std::sqrt(alpha) - std::sqrt(beta);
  return 2.0 / (gap * gap);
}

double lemma4_success_bound(std::size_t n1, std::size_t n2, double p, double q, double mu) {
  if (n1 == 0 || n2 == 0) throw InvalidArgument("community sizes must be positive");
  if (!(q > 0.0) || !(p > q) || p > 1.0) throw InvalidArgument("requires 1 >= p > q > 0");
  if (!(mu > q)) throw InvalidArgument("requires mu > q");
  const double n = static_cast<double>(n1 + n2);
  const double m = static_cast<double>(n1 > n2 ? n1 - n2 : n2 - n1);
  double exponent = 0.0;
  if (mu < (p + q) / 2.0) {
    const double num = (mu - q) * n;
    exponent = -1.5 * num * num / ((3.0 * p + q + 2.0 * mu) * n + 3.0 * (p - q) * m);
  } else {
    const double num = (p - q) * n - (2.0 * mu - (p + q)) * m;
    exponent = -(3.0 / 16.0) * num * num / ((2.0 * p + q) * n + (2.0 * p - q - mu) * m);
  }
  return 1.0 - 2.0 * n * std::exp(exponent);
}

bool corollary5_condition(double alpha, double beta, double delta) {
  require_strict(alpha, beta);
  if (!(delta >= 0.0)) throw InvalidArgument("delta must be non-negative");
  const double d = alpha - beta;
  return 3.0 * d * d > 16.0 * (2.0 * alpha + beta) + 24.0 * d * delta;
}

ThresholdReport threshold_report(double alpha, double beta, std::optional<double> delta) {
  ThresholdReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.phase = prop1_phase(alpha, beta);
  r.prop1_recoverable = r.phase == Phase::kRecoverable;
  r.lemma2_gamma = lemma2_gamma_threshold(alpha, beta);
  r.theorem6_gamma = theorem6_gamma_threshold(alpha, beta);
  r.conjecture_gamma = conjecture_gamma_threshold(alpha, beta);
  r.delta = delta;
  if (delta) r.corollary5_holds = corollary5_condition(alpha, beta, *delta);
  return r;
}

double prop1_curve_alpha(double beta) {
  if (!(beta >= 0.0)) throw InvalidArgument("beta must be non-negative");
  const double root = std::sqrt(beta) + std::numbers::sqrt2;
  return root * root;
}

double conjecture_iso_alpha(double beta, double gamma) {
  if (!(beta >= 0.0)) throw InvalidArgument("beta must be non-negative");
  if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
  const double root = std::sqrt(beta) + std::sqrt(2.0 / gamma);
  return root * root;
}

std::vector<std::pair<double, double>> prop1_curve(double beta_min, double beta_max, std::size_t count) {
  if (count < 2) throw InvalidArgument("curve needs at least two points");
  if (!(beta_min >= 0.0) || !(beta_max >= beta_min)) throw InvalidArgument("invalid beta range");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(count);
  const double span = beta_max - beta_min;
  const double steps = static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    const double beta = beta_min + span * static_cast<double>(k) / steps;
    pts.emplace_back(beta, prop1_curve_alpha(beta));
  }
  return pts;
}

}  // namespace sketchsdp
