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

#include "sbm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace sketchsdp {

namespace {

bool is_rate(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

SbmParams SbmParams::general(std::size_t n1, std::size_t n2, double p, double q) {
  SbmParams s{n1, n2, p, q};
  s.validate();
  return s;
}

SbmParams SbmParams::assortative(std::size_t n1, std::size_t n2, double p, double q) {
  SbmParams s = general(n1, n2, p, q);
  if (q > p) throw InvalidArgument("assortative SBM requires q <= p");
  return s;
}

void SbmParams::validate() const {
  if (n1 == 0 || n2 == 0) throw InvalidArgument("community sizes must be positive");
  if (!is_rate(p) || !is_rate(q)) throw InvalidArgument("edge rates must lie in [0,1]");
}

void LogScaleParams::validate() const {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw InvalidArgument("alpha and beta must be positive");
  if (n < 2 || n % 2 != 0) throw InvalidArgument("n must be an even integer >= 2");
}

ScaledRates to_sbm(const LogScaleParams& params) {
  params.validate();
  return to_sbm(params.alpha, params.beta, params.n / 2, params.n / 2);
}

ScaledRates to_sbm(double alpha, double beta, std::size_t n1, std::size_t n2) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw InvalidArgument("alpha and beta must be positive");
  const double n = static_cast<double>(n1 + n2);
  const double scale = std::log(n) / n;
  double p = alpha * scale;
  double q = beta * scale;
  ScaledRates out;
  out.clamped = p > 1.0 || q > 1.0;
  p = std::min(p, 1.0);
  q = std::min(q, 1.0);
  out.params = SbmParams::general(n1, n2, p, q);
  return out;
}

PlantedGraph sample_sbm(const SbmParams& params, Seed seed) {
  params.validate();
  const std::size_t n = params.n();
  Rng rng(seed);
  std::vector<Edge> edges;
  const double expected = params.p * static_cast<double>(n) * static_cast<double>(n) / 2.0;
  edges.reserve(static_cast<std::size_t>(expected) + 16);
  for (std::size_t i = 0; i < n; ++i) {
    const bool first_i = i < params.n1;
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = first_i == (j < params.n1);
      if (rng.bernoulli(same ? params.p : params.q)) {
        edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      }
    }
  }
  PlantedGraph out{Graph::from_edges(n, edges), {}};
  std::vector<std::int8_t> signs(n, -1);
  std::fill(signs.begin(), signs.begin() + static_cast<std::ptrdiff_t>(params.n1), std::int8_t{1});
  out.planted = Partition::from_signs(out.graph, std::span<const std::int8_t>(signs));
  return out;
}

VertexSet bernoulli_vertex_sample(const Graph& graph, double gamma, Seed seed) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw InvalidArgument("gamma must lie in [0,1]");
  Rng rng(seed);
  VertexSet out;
  for (std::size_t i = 0; i < graph.num_vertices(); ++i) {
    if (rng.bernoulli(gamma)) out.push_back(graph.label(i));
  }
  return out;
}

}  // namespace sketchsdp
