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

#include "certificate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "errors.hpp"

namespace sketchsdp {

namespace {

constexpr double kDenseZeroTol = 1e-10;

using Vec = Eigen::VectorXd;

// Removes the component along the unit vector u.
void deflate(Vec& x, const Vec& u) { x -= u.dot(x) * u; }

struct RitzPair {
  double theta = 0.0;
  double residual = 0.0;
  Vec coeffs;  // eigenvector of T
};

RitzPair smallest_ritz(const std::vector<double>& alpha, const std::vector<double>& beta, double beta_last) {
  const auto k = static_cast<Eigen::Index>(alpha.size());
  Vec diag(k);
  Vec sub(std::max<Eigen::Index>(k - 1, 0));
  for (Eigen::Index i = 0; i < k; ++i) diag(i) = alpha[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < k; ++i) sub(i) = beta[static_cast<std::size_t>(i)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  RitzPair out;
  out.theta = eig.eigenvalues()(0);
  out.coeffs = eig.eigenvectors().col(0);
  out.residual = std::abs(beta_last * out.coeffs(k - 1));
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kCertified:
      return "CERTIFIED";
    case Verdict::kNotCertified:
      return "NOT_CERTIFIED";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

DualCertificateOperator::DualCertificateOperator(const Graph& graph, const Partition& partition, double mu)
    : graph_(&graph), mu_(mu), g_(partition.sign_vector(graph)) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw InvalidArgument("mu must be a finite value >= 0");
  const std::size_t n = graph.num_vertices();
  long long imbalance = 0;  // n1 - n2
  for (std::int8_t s : g_) imbalance += s;
  dual_diag_.assign(n, 0.0);
  const double nf = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    long long own = 0;
    long long other = 0;
    for (std::uint32_t j : graph.neighbors(i)) (g_[j] == g_[i] ? own : other) += 1;
    dual_diag_[i] = static_cast<double>(own - other) - mu * static_cast<double>(imbalance) * g_[i];
    const double deg = static_cast<double>(graph.degree(i));
    const double row = std::abs(dual_diag_[i] + mu) + deg * std::abs(mu - 1.0) + (nf - 1.0 - deg) * mu;
    scale_ = std::max(scale_, row);
  }
}

void DualCertificateOperator::apply(std::span<const double> x, std::span<double> out) const {
  const std::size_t n = size();
  if (x.size() != n || out.size() != n) throw InvalidArgument("certificate operator: dimension mismatch");
  const double shift = mu_ * std::accumulate(x.begin(), x.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double ax = 0.0;
    for (std::uint32_t j : graph_->neighbors(i)) ax += x[j];
    out[i] = dual_diag_[i] * x[i] - ax + shift;
  }
}

Eigen::MatrixXd DualCertificateOperator::dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd z = Eigen::MatrixXd::Constant(n, n, mu_);
  for (Eigen::Index i = 0; i < n; ++i) z(i, i) += dual_diag_[static_cast<std::size_t>(i)];
  for (const Edge& e : graph_->edges()) {
    z(e.u, e.v) -= 1.0;
    z(e.v, e.u) -= 1.0;
  }
  return z;
}

bool dense_unique_opt_check(const DualCertificateOperator& z) {
  const std::size_t n = z.size();
  if (n == 0) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(z.dense());
  const Vec& lambda = eig.eigenvalues();
  if (lambda(0) < -kDenseZeroTol) return false;
  std::size_t zeros = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) zeros += lambda(i) <= kDenseZeroTol ? 1 : 0;
  if (zeros != 1) return false;
  Vec g(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) g(static_cast<Eigen::Index>(i)) = z.cut()[i];
  const double cosine = std::abs(eig.eigenvectors().col(0).dot(g)) / g.norm();
  return cosine >= 1.0 - 1e-8;
}

bool exhaustive_unique_opt_check(const Graph& graph, const Partition& partition, double mu) {
  if (graph.num_vertices() > kExhaustiveMaxVertices) {
    throw InvalidArgument("exhaustive_unique_opt_check is limited to 12 vertices");
  }
  return dense_unique_opt_check(DualCertificateOperator(graph, partition, mu));
}

namespace {

class DeflatedZ {
 public:
  explicit DeflatedZ(const DualCertificateOperator& z) : z_(z), buffer_(static_cast<Eigen::Index>(z.size())) {
    const auto n = static_cast<Eigen::Index>(z.size());
    u_.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) u_(i) = z.cut()[static_cast<std::size_t>(i)];
    u_ /= std::sqrt(static_cast<double>(n));
  }

  const Vec& null_direction() const { return u_; }

  // P Z P x with P the projector onto g-perp; x must already be in g-perp.
  Vec apply(const Vec& x) const {
    z_.apply(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())),
             std::span<double>(buffer_.data(), static_cast<std::size_t>(buffer_.size())));
    Vec y = buffer_;
    deflate(y, u_);
    return y;
  }

  Vec random_start(Rng& rng) const {
    Vec x(u_.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.normal();
    deflate(x, u_);
    deflate(x, u_);
    return x / x.norm();
  }

 private:
  const DualCertificateOperator& z_;
  Vec u_;
  mutable Vec buffer_;
};

struct Estimate {
  double theta = std::numeric_limits<double>::infinity();
  double residual = std::numeric_limits<double>::infinity();
  bool converged = false;
  std::size_t iterations = 0;
  Vec vector;
};

Estimate lanczos_min(const DeflatedZ& op, std::size_t dim, double residual_tol, double refute_below,
                     double breakdown_tol, std::size_t max_iterations, Rng& rng) {
  const Eigen::Index n = op.null_direction().size();
  const std::size_t budget = std::min(dim, max_iterations);
  Eigen::MatrixXd basis(n, static_cast<Eigen::Index>(budget));
  std::vector<double> alpha;
  std::vector<double> beta;
  alpha.reserve(budget);
  beta.reserve(budget);

  Estimate est;
  Vec q = op.random_start(rng);
  Vec prev = Vec::Zero(n);
  double beta_prev = 0.0;
  for (std::size_t k = 0; k < budget; ++k) {
    const auto kk = static_cast<Eigen::Index>(k);
    basis.col(kk) = q;
    Vec w = op.apply(q);
    const double a = q.dot(w);
    w -= a * q + beta_prev * prev;
    // Full reorthogonalization (twice is enough), then re-deflate.
    for (int pass = 0; pass < 2; ++pass) {
      const auto used = basis.leftCols(kk + 1);
      w -= used * (used.transpose() * w);
      deflate(w, op.null_direction());
    }
    const double b = w.norm();
    alpha.push_back(a);
    est.iterations = k + 1;

    const bool exhausted = k + 1 == dim || b <= breakdown_tol;
    const bool check = exhausted || k + 1 == budget || k < 20 || (k + 1) % 10 == 0;
    if (check) {
      RitzPair ritz = smallest_ritz(alpha, beta, exhausted ? 0.0 : b);
      est.theta = ritz.theta;
      est.residual = ritz.residual;
      est.converged = ritz.residual <= residual_tol;
      if (est.converged || ritz.theta <= refute_below || exhausted || k + 1 == budget) {
        est.vector = basis.leftCols(kk + 1) * ritz.coeffs;
        break;
      }
    }
    if (exhausted) break;
    beta.push_back(b);
    beta_prev = b;
    prev = q;
    q = w / b;
  }
  return est;
}

// Power iteration on shift*I - Z over g-perp; shift bounds lambda_max(Z).
Estimate shifted_power_min(const DeflatedZ& op, double shift, double residual_tol, double refute_below,
                           std::size_t max_iterations, Rng& rng) {
  Estimate est;
  Vec x = op.random_start(rng);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    const Vec zx = op.apply(x);
    const double rayleigh = x.dot(zx);
    est.theta = rayleigh;
    est.residual = (zx - rayleigh * x).norm();
    est.iterations = it + 1;
    est.vector = x;
    if (rayleigh <= refute_below) break;
    if (est.residual <= residual_tol) {
      est.converged = true;
      break;
    }
    Vec y = shift * x - zx;
    deflate(y, op.null_direction());
    const double norm = y.norm();
    if (norm == 0.0) break;
    x = y / norm;
  }
  return est;
}

}  // namespace

CertificateReport check_certificate(const Graph& graph, const Partition& partition, double mu,
                                    const CertificateTolerances& tol) {
  DualCertificateOperator z(graph, partition, mu);
  const std::size_t n = z.size();
  CertificateReport report;
  report.z_scale = z.scale();

  std::vector<double> g(z.cut().begin(), z.cut().end());
  std::vector<double> zg(n);
  z.apply(g, zg);
  for (double v : zg) report.z_g_residual = std::max(report.z_g_residual, std::abs(v));
  if (report.z_g_residual > 1e-9 * (1.0 + z.scale())) {
    // Z g = 0 holds identically; anything else means the inputs are corrupt.
    report.verdict = Verdict::kInconclusive;
    return report;
  }
  if (n <= 1) {
    // g-perp is trivial: Z = 0 has rank n - 1 = 0.
    report.lambda2_lower = std::numeric_limits<double>::infinity();
    report.verdict = Verdict::kCertified;
    return report;
  }

  const double margin = tol.positive_margin * z.scale();
  const double residual_tol = tol.residual * std::max(z.scale(), 1e-300);
  DeflatedZ op(z);
  Rng rng(tol.seed);

  Estimate est = lanczos_min(op, n - 1, residual_tol, margin, 1e-12 * z.scale(), tol.max_iterations, rng);
  report.iterations = est.iterations;
  if (!est.converged && est.theta > margin) {
    Estimate fallback = shifted_power_min(op, z.scale(), residual_tol, margin, tol.power_iterations, rng);
    report.iterations += fallback.iterations;
    report.used_fallback = true;
    if (fallback.converged || fallback.theta <= margin) est = std::move(fallback);
  }

  report.lambda2_estimate = est.theta;
  if (est.theta <= margin) {
    report.verdict = Verdict::kNotCertified;
    Vec w = est.vector;
    deflate(w, op.null_direction());
    w /= w.norm();
    report.witness.assign(w.data(), w.data() + w.size());
    report.witness_rayleigh = w.dot(op.apply(w));
    report.lambda2_lower = est.converged ? est.theta - est.residual : -std::numeric_limits<double>::infinity();
  } else if (est.converged && est.theta - est.residual > margin) {
    report.verdict = Verdict::kCertified;
    report.lambda2_lower = est.theta - est.residual;
  } else {
    report.verdict = Verdict::kInconclusive;
    if (est.converged) report.lambda2_lower = est.theta - est.residual;
  }

  if (tol.dense_cross_check && n <= kDenseCrossCheckLimit && report.verdict != Verdict::kInconclusive) {
    const bool dense = dense_unique_opt_check(z);
    if (dense != (report.verdict == Verdict::kCertified)) {
      throw std::logic_error("certificate: iterative verdict disagrees with dense eigendecomposition");
    }
  }
  return report;
}

}  // namespace sketchsdp
