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
#include <span>
#include <vector>

#include "graph.hpp"
#include "sbm.hpp"

namespace sketchsdp {

/// Objective matrix C = A - mu J, applied implicitly.
///
/// The all-ones matrix J is never formed: C x = A x - mu (sum x) 1, so one
/// application costs O(|E| + n). The classical +-1 encoding B = 2A - J + I is
/// the affine image 2C + I at mu = 1/2, so it shares maximizers over balanced
/// sign vectors.
class ObjectiveOperator {
 public:
  ObjectiveOperator(const Graph& graph, double mu);

  std::size_t size() const noexcept { return graph_->num_vertices(); }
  double mu() const noexcept { return mu_; }
  const Graph& graph() const noexcept { return *graph_; }

  void apply(std::span<const double> x, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> x) const;

  // x^T A x - mu (1^T x)^2
  double quadratic_form(std::span<const double> x) const;
  double quadratic_form(std::span<const std::int8_t> signs) const;

 private:
  const Graph* graph_;
  double mu_;
};

struct MuEstimate {
  double mu = 0.0;
  std::size_t edge_count = 0;
  std::size_t n = 0;
};

// |E| / C(n,2). Requires n >= 2.
MuEstimate estimate_mu(const Graph& graph);

// Expected edge density of a balanced SBM: (p+q)/2 - (p-q)/(2(n-1)).
double expected_mu(const SbmParams& params);

// Concentration radius c ln(n) / n^{3/2}. Real n is accepted so the formula
// can be evaluated off the integers.
double mu_concentration_bound(double n, double c);
double mu_concentration_bound(const LogScaleParams& params, double c);

}  // namespace sketchsdp
