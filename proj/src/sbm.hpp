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

#include "graph.hpp"
#include "rng.hpp"

namespace sketchsdp {

/// Two-community stochastic block model SBM(n1, n2, p, q).
struct SbmParams {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double p = 0.0;  // within-community edge rate
  double q = 0.0;  // cross-community edge rate

  // Any rates in [0,1].
  static SbmParams general(std::size_t n1, std::size_t n2, double p, double q);
  // Additionally requires q <= p.
  static SbmParams assortative(std::size_t n1, std::size_t n2, double p, double q);

  std::size_t n() const noexcept { return n1 + n2; }
  // |n1 - n2|
  std::size_t imbalance() const noexcept { return n1 > n2 ? n1 - n2 : n2 - n1; }
  void validate() const;
};

/// Log-scaled rates p = alpha ln(n)/n, q = beta ln(n)/n on a balanced graph.
struct LogScaleParams {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t n = 0;

  void validate() const;
};

struct ScaledRates {
  SbmParams params;
  bool clamped = false;  // p or q exceeded 1 and was clamped
};

// Balanced conversion (n1 = n2 = n/2).
ScaledRates to_sbm(const LogScaleParams& params);
// Explicit community sizes; n := n1 + n2 is used inside the logarithm.
ScaledRates to_sbm(double alpha, double beta, std::size_t n1, std::size_t n2);

struct PlantedGraph {
  Graph graph;
  Partition planted;  // first n1 vertices on +1
};

// Samples every pair i<j in lexicographic order with one uniform draw each.
PlantedGraph sample_sbm(const SbmParams& params, Seed seed);

// Each vertex kept independently with probability gamma.
VertexSet bernoulli_vertex_sample(const Graph& graph, double gamma, Seed seed);

}  // namespace sketchsdp
