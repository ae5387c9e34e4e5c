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
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "graph.hpp"
#include "rng.hpp"

namespace sketchsdp {

/// Dual certificate matrix for the cut g = 1_{S1} - 1_{S2}:
///
///   Z = D+ - D- - mu (n1 - n2) diag(g) - A + mu J
///
/// where D+ / D- hold each vertex's degree towards its own / the other side.
/// If Z is psd with rank n-1 then gg^T is the unique optimum of the
/// (A, mu)-SDP. Applied implicitly in O(|E| + n).
class DualCertificateOperator {
 public:
  DualCertificateOperator(const Graph& graph, const Partition& partition, double mu);

  std::size_t size() const noexcept { return graph_->num_vertices(); }
  double mu() const noexcept { return mu_; }
  const std::vector<std::int8_t>& cut() const noexcept { return g_; }
  // Diagonal of D+ - D- - mu (n1 - n2) diag(g).
  const std::vector<double>& dual_diagonal() const noexcept { return dual_diag_; }
  // Largest absolute row sum of Z (exact; bounds the spectral radius).
  double scale() const noexcept { return scale_; }

  void apply(std::span<const double> x, std::span<double> out) const;
  Eigen::MatrixXd dense() const;

 private:
  const Graph* graph_;
  double mu_;
  std::vector<std::int8_t> g_;
  std::vector<double> dual_diag_;
  double scale_ = 0.0;
};

enum class Verdict { kCertified, kNotCertified, kInconclusive };

std::string_view to_string(Verdict v) noexcept;

struct CertificateTolerances {
  // Certify only if lambda_2 is provably above positive_margin * scale.
  double positive_margin = 1e-8;
  // Ritz residual (relative to scale) required to call lambda_2 converged.
  double residual = 1e-9;
  std::size_t max_iterations = 1000;
  std::size_t power_iterations = 20000;
  Seed seed = 0x5eed;
  // Also run a dense eigendecomposition (n <= kDenseCrossCheckLimit) and
  // fail loudly if it disagrees with the iterative verdict.
  bool dense_cross_check = false;
};

inline constexpr std::size_t kDenseCrossCheckLimit = 512;

struct CertificateReport {
  double z_g_residual = 0.0;  // ||Z g||_inf
  double z_scale = 0.0;
  // Certified lower bound on lambda_2(Z); -inf when none could be established.
  double lambda2_lower = -std::numeric_limits<double>::infinity();
  // Smallest Ritz value on g-perp, an upper bound on lambda_2(Z).
  double lambda2_estimate = std::numeric_limits<double>::infinity();
  Verdict verdict = Verdict::kInconclusive;
  std::size_t iterations = 0;
  bool used_fallback = false;
  // For kNotCertified: unit w orthogonal to g with w^T Z w <= margin
  // (strictly negative whenever Z is indefinite).
  std::vector<double> witness;
  double witness_rayleigh = 0.0;
};

/// Decides whether gg^T is certified as the unique (A, mu)-SDP optimum.
///
/// Lanczos with full reorthogonalization on Z restricted to the complement of
/// g. Any Ritz value is a Rayleigh quotient, so a Ritz value at or below the
/// margin refutes the certificate outright. Certification requires the
/// smallest Ritz pair to converge with theta - residual above the margin.
/// A shifted power iteration (shift = Gershgorin bound) is tried when Lanczos
/// exhausts its budget.
CertificateReport check_certificate(const Graph& graph, const Partition& partition, double mu,
                                    const CertificateTolerances& tol = {});

inline constexpr std::size_t kExhaustiveMaxVertices = 12;

// Dense oracle: Z psd, exactly one eigenvalue <= 1e-10, null vector parallel
// to g. Limited to 12 vertices.
bool exhaustive_unique_opt_check(const Graph& graph, const Partition& partition, double mu);

// Same test without the size guard used by exhaustive_unique_opt_check;
// callers are responsible for keeping n small.
bool dense_unique_opt_check(const DualCertificateOperator& z);

}  // namespace sketchsdp
