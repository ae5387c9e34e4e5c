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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pipeline.hpp"
#include "rng.hpp"
#include "sdp.hpp"

namespace sketchsdp {

enum class Method { kFullSdp, kSketch };
enum class MuPolicy { kAuto, kHalf, kGoemansWilliamson, kOracle };

std::string_view to_string(Method m) noexcept;
std::string_view to_string(MuPolicy m) noexcept;
std::optional<Method> parse_method(std::string_view text) noexcept;
std::optional<MuPolicy> parse_mu_policy(std::string_view text) noexcept;

/// Grid over (alpha, beta) with `reps` SBM draws per cell and per method.
struct GridSpec {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::size_t n = 0;
  // Unbalanced override; when set, n1 + n2 replaces n.
  std::optional<std::size_t> n1;
  std::optional<std::size_t> n2;
  std::size_t reps = 1;
  std::vector<Method> methods{Method::kFullSdp, Method::kSketch};
  std::optional<double> gamma;  // nullopt = auto
  MuPolicy mu_policy = MuPolicy::kAuto;
  Seed base_seed = 0;
  SolverConfig solver;
  bool certify = true;
  TieRule tie_rule = TieRule::kFail;

  std::size_t community1() const noexcept { return n1 ? *n1 : n / 2; }
  std::size_t community2() const noexcept { return n2 ? *n2 : n - n / 2; }
  std::size_t total_vertices() const noexcept { return community1() + community2(); }
  void validate() const;
};

// Key-value text (`key = value`, `#` comments). Keys: alphas, betas, n, n1,
// n2, reps, methods, gamma, mu, seed, certify, tie_rule, max_sweeps, tol, rank.
GridSpec parse_grid_spec(std::istream& in);
GridSpec load_grid_spec(const std::string& path);

enum class CellStatus { kOk, kSkipped, kError };

struct CellResult {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t alpha_index = 0;
  std::size_t beta_index = 0;
  std::size_t rep = 0;
  Method method = Method::kFullSdp;
  std::size_t n = 0;
  double gamma = 0.0;
  double mu = 0.0;
  CellStatus status = CellStatus::kOk;
  std::string error;
  bool recovered = false;
  bool fell_back = false;
  std::size_t unassigned = 0;
  bool clamped = false;
  StageTimings timings;
  double runtime_ms = 0.0;  // solve + certify + extend
  Seed seed = 0;
};

// Graph seed depends on (alpha, beta, rep) only, so both methods see the same
// graph; the method seed adds the method index.
Seed cell_graph_seed(Seed base, std::size_t alpha_index, std::size_t beta_index, std::size_t rep);
Seed cell_method_seed(Seed base, std::size_t alpha_index, std::size_t beta_index, std::size_t rep, Method method);

// Runs one cell; never throws for per-cell failures.
CellResult run_cell(const GridSpec& spec, std::size_t alpha_index, std::size_t beta_index, std::size_t rep,
                    Method method);

// Every cell on `jobs` worker threads. Output order is alpha-major, then
// beta, rep, method, regardless of scheduling.
std::vector<CellResult> run_grid(const GridSpec& spec, std::size_t jobs = 1);

inline constexpr std::string_view kCsvHeader =
    "alpha,beta,rep,method,n,gamma,mu,recovered,fell_back,unassigned,runtime_ms,seed";

void write_csv(std::ostream& out, const std::vector<CellResult>& results);
std::string emit_csv(const std::vector<CellResult>& results);
void emit_csv_file(const std::vector<CellResult>& results, const std::string& path);
// Reads rows written by emit_csv back (runtime lands in runtime_ms only).
std::vector<CellResult> parse_csv(std::istream& in);

enum class HeatmapMetric { kRecoveryRate, kMeanRuntime };
enum class HeatmapOverlay { kNone, kProp1Curve, kConjectureGammaIso };

std::optional<HeatmapMetric> parse_metric(std::string_view text) noexcept;
std::optional<HeatmapOverlay> parse_overlay(std::string_view text) noexcept;

struct HeatmapOptions {
  HeatmapMetric metric = HeatmapMetric::kRecoveryRate;
  HeatmapOverlay overlay = HeatmapOverlay::kNone;
  std::optional<Method> method;  // only cells of this method; nullopt = all
  // gamma for kConjectureGammaIso; nullopt = median gamma of the results.
  std::optional<double> overlay_gamma;
  std::size_t overlay_points = 100;
};

struct HeatmapCell {
  double alpha = 0.0;
  double beta = 0.0;
  double value = 0.0;      // recovery rate or mean runtime (ms)
  double intensity = 0.0;  // in [0,1]; 1 renders black
};

// Aggregated cells in row-major order (alphas descending top to bottom).
// Throws InvalidArgument unless every (alpha, beta) pair is present.
std::vector<HeatmapCell> aggregate_heatmap(const std::vector<CellResult>& results, const HeatmapOptions& options);

std::string emit_heatmap_svg(const std::vector<CellResult>& results, const HeatmapOptions& options);
void emit_heatmap_svg_file(const std::vector<CellResult>& results, const HeatmapOptions& options,
                           const std::string& path);

}  // namespace sketchsdp

namespace sketchsdp {

/// Pixel geometry of a heatmap: one column per beta, one row per alpha
/// (largest alpha on top). Continuous (beta, alpha) points map through
/// piecewise-linear interpolation between cell centers.
class HeatmapGeometry {
 public:
  static constexpr double kCell = 28.0;
  static constexpr double kLeft = 64.0;
  static constexpr double kTop = 24.0;
  static constexpr double kRight = 16.0;
  static constexpr double kBottom = 48.0;

  HeatmapGeometry(std::vector<double> betas, std::vector<double> alphas);

  const std::vector<double>& betas() const noexcept { return betas_; }
  const std::vector<double>& alphas() const noexcept { return alphas_; }

  double width() const noexcept { return kLeft + kCell * static_cast<double>(betas_.size()) + kRight; }
  double height() const noexcept { return kTop + kCell * static_cast<double>(alphas_.size()) + kBottom; }
  double plot_width() const noexcept { return kCell * static_cast<double>(betas_.size()); }
  double plot_height() const noexcept { return kCell * static_cast<double>(alphas_.size()); }

  // Top-left corner of the cell for betas()[col], alphas()[row].
  double cell_x(std::size_t col) const noexcept { return kLeft + kCell * static_cast<double>(col); }
  double cell_y(std::size_t row) const noexcept;

  double x(double beta) const noexcept;
  double y(double alpha) const noexcept;

 private:
  std::vector<double> betas_;   // ascending
  std::vector<double> alphas_;  // ascending
};

}  // namespace sketchsdp
