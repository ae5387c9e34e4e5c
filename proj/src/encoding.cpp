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

#include "encoding.hpp"

#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace sketchsdp {

ObjectiveOperator::ObjectiveOperator(const Graph& graph, double mu) : graph_(&graph), mu_(mu) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw InvalidArgument("mu must be a finite value >= 0");
}

void ObjectiveOperator::apply(std::span<const double> x, std::span<double> out) const {
  const std::size_t n = size();
  if (x.size() != n || out.size() != n) throw InvalidArgument("objective operator: dimension mismatch");
  const double shift = mu_ * std::accumulate(x.begin(), x.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::uint32_t j : graph_->neighbors(i)) acc += x[j];
    out[i] = acc - shift;
  }
}

std::vector<double> ObjectiveOperator::apply(std::span<const double> x) const {
  std::vector<double> out(x.size());
  apply(x, out);
  return out;
}

double ObjectiveOperator::quadratic_form(std::span<const double> x) const {
  if (x.size() != size()) throw InvalidArgument("objective operator: dimension mismatch");
  double quad = 0.0;
  for (const Edge& e : graph_->edges()) quad += 2.0 * x[e.u] * x[e.v];
  const double s = std::accumulate(x.begin(), x.end(), 0.0);
  return quad - mu_ * s * s;
}

double ObjectiveOperator::quadratic_form(std::span<const std::int8_t> signs) const {
  if (signs.size() != size()) throw InvalidArgument("objective operator: dimension mismatch");
  // Integer arithmetic for the graph part keeps this exact.
  long long quad = 0;
  long long s = 0;
  for (const Edge& e : graph_->edges()) quad += 2LL * signs[e.u] * signs[e.v];
  for (std::int8_t v : signs) s += v;
  return static_cast<double>(quad) - mu_ * static_cast<double>(s * s);
}

MuEstimate estimate_mu(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  if (n < 2) throw InvalidArgument("estimate_mu requires at least 2 vertices");
  MuEstimate est;
  est.n = n;
  est.edge_count = graph.edge_count();
  // 2|E| / (n(n-1)): both integers are exact in double for any graph that fits
  // in memory, so this is a single correctly rounded division.
  const double num = 2.0 * static_cast<double>(est.edge_count);
  const double den = static_cast<double>(n) * static_cast<double>(n - 1);
  est.mu = num / den;
  return est;
}

double expected_mu(const SbmParams& params) {
  params.validate();
  if (params.n1 != params.n2) throw InvalidArgument("expected_mu is defined for balanced SBMs only");
  const double n = static_cast<double>(params.n());
  return (params.p + params.q) / 2.0 - (params.p - params.q) / (2.0 * (n - 1.0));
}

double mu_concentration_bound(double n, double c) {
  if (!(n >= 2.0)) throw InvalidArgument("mu_concentration_bound requires n >= 2");
  if (!(c >= 0.0)) throw InvalidArgument("c must be non-negative");
  return c * std::log(n) / (n * std::sqrt(n));
}

double mu_concentration_bound(const LogScaleParams& params, double c) {
  return mu_concentration_bound(static_cast<double>(params.n), c);
}

}  // namespace sketchsdp
