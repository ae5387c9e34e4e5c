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

// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sketchsdp/sketchsdp.h"

namespace {

using nlohmann::json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(sksdp_status status) {
  if (status != SKSDP_OK) throw CliError(std::string(sksdp_status_string(status)) + ": " + sksdp_last_error());
}

struct GraphDeleter {
  void operator()(sksdp_graph* g) const { sksdp_graph_free(g); }
};
struct PartitionDeleter {
  void operator()(sksdp_partition* p) const { sksdp_partition_free(p); }
};
struct SketchDeleter {
  void operator()(sksdp_sketch_result* r) const { sksdp_sketch_result_free(r); }
};
struct GridDeleter {
  void operator()(sksdp_grid_results* r) const { sksdp_grid_results_free(r); }
};
using GraphPtr = std::unique_ptr<sksdp_graph, GraphDeleter>;
using PartitionPtr = std::unique_ptr<sksdp_partition, PartitionDeleter>;

GraphPtr load_graph(const std::string& path) {
  sksdp_graph* g = nullptr;
  check(sksdp_graph_load(path.c_str(), &g));
  return GraphPtr(g);
}

PartitionPtr load_partition(const std::string& path) {
  sksdp_partition* p = nullptr;
  check(sksdp_partition_load(path.c_str(), &p));
  return PartitionPtr(p);
}

// "auto" -> estimate on the graph.
double resolve_mu(const std::string& text, const sksdp_graph* graph) {
  if (text == "auto") {
    double mu = 0.0;
    check(sksdp_estimate_mu(graph, &mu));
    return mu;
  }
  std::size_t used = 0;
  const double mu = std::stod(text, &used);
  if (used != text.size()) throw CliError("--mu expects a number or 'auto'");
  return mu;
}

void emit_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

json solve_json(const sksdp_solve_info& info) {
  return {{"objective", info.objective},
          {"rank_one_gap", info.rank_one_gap},
          {"sweeps_used", info.sweeps_used},
          {"converged", info.converged != 0},
          {"rank", info.rank}};
}

json certificate_json(const sksdp_certificate_info& info) {
  json j = {{"verdict", sksdp_verdict_string(info.verdict)},
            {"zg_residual", info.zg_residual},
            {"z_scale", info.z_scale},
            {"iterations", info.iterations}};
  j["lambda2_lower"] = std::isfinite(info.lambda2_lower) ? json(info.lambda2_lower) : json(nullptr);
  j["lambda2_estimate"] = std::isfinite(info.lambda2_estimate) ? json(info.lambda2_estimate) : json(nullptr);
  return j;
}

struct SolverFlags {
  std::string rank = "auto";
  std::size_t max_sweeps = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;

  void add(CLI::App* app) {
    app->add_option("--rank", rank, "factor rank or 'auto'");
    app->add_option("--max-sweeps", max_sweeps, "sweep limit");
    app->add_option("--tol", tol, "relative per-sweep objective tolerance");
  }

  sksdp_solver_options options() const {
    sksdp_solver_options o;
    sksdp_solver_options_default(&o);
    if (rank != "auto") o.rank = std::stoul(rank);
    if (max_sweeps > 0) o.max_sweeps = max_sweeps;
    if (tol > 0.0) o.objective_tolerance = tol;
    o.seed = seed;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planted bisection recovery by sketch-and-solve SDP"};
  app.set_version_flag("--version", std::string(sksdp_version()));
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "sample a two-community SBM graph");
  std::size_t gen_n = 0, gen_n1 = 0, gen_n2 = 0;
  std::optional<double> gen_p, gen_q, gen_alpha, gen_beta;
  std::uint64_t gen_seed = 0;
  std::string gen_graph, gen_partition;
  gen->add_option("--n", gen_n, "total vertices (balanced)");
  gen->add_option("--n1", gen_n1, "community 1 size");
  gen->add_option("--n2", gen_n2, "community 2 size");
  gen->add_option("--p", gen_p, "within-community rate");
  gen->add_option("--q", gen_q, "cross-community rate");
  gen->add_option("--alpha", gen_alpha, "p = alpha ln(n)/n");
  gen->add_option("--beta", gen_beta, "q = beta ln(n)/n");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_graph, "edge-list output")->required();
  gen->add_option("--planted", gen_partition, "planted partition output");

  // solve
  auto* solve = app.add_subcommand("solve", "solve the (A,mu)-SDP on a graph");
  std::string solve_graph, solve_mu = "auto", solve_out, solve_json_path;
  SolverFlags solve_flags;
  solve->add_option("graph", solve_graph, "edge-list file")->required();
  solve->add_option("--mu", solve_mu, "penalty on J, or 'auto' (edge density)");
  solve_flags.add(solve);
  solve->add_option("--seed", solve_flags.seed);
  solve->add_option("--out", solve_out, "partition output");
  solve->add_option("--json", solve_json_path, "diagnostics output ('-' = stdout)");

  // certify
  auto* cert = app.add_subcommand("certify", "check the dual certificate for a cut");
  std::string cert_graph, cert_partition, cert_mu = "auto", cert_json;
  cert->add_option("graph", cert_graph)->required();
  cert->add_option("partition", cert_partition)->required();
  cert->add_option("--mu", cert_mu);
  cert->add_option("--json", cert_json, "report output ('-' = stdout)");

  // sketch
  auto* sketch = app.add_subcommand("sketch", "sketch-and-solve clustering");
  std::string sk_graph, sk_gamma = "auto", sk_mu = "auto", sk_tie = "fail", sk_out, sk_json;
  std::optional<double> sk_alpha, sk_beta;
  bool sk_no_certify = false;
  SolverFlags sk_flags;
  sketch->add_option("graph", sk_graph)->required();
  sketch->add_option("--gamma", sk_gamma, "sampling rate or 'auto'");
  sketch->add_option("--alpha", sk_alpha);
  sketch->add_option("--beta", sk_beta);
  sketch->add_option("--mu", sk_mu);
  sketch->add_option("--seed", sk_flags.seed);
  sketch->add_option("--tie-rule", sk_tie)->check(CLI::IsMember({"fail", "to-first", "random"}));
  sketch->add_flag("--no-certify", sk_no_certify);
  sk_flags.add(sketch);
  sketch->add_option("--out", sk_out, "partition output");
  sketch->add_option("--json", sk_json, "result output ('-' = stdout)");

  // thresholds
  auto* thr = app.add_subcommand("thresholds", "closed-form thresholds");
  std::optional<double> thr_alpha, thr_beta, thr_delta;
  std::string thr_curve;
  double thr_bmin = 1.0, thr_bmax = 10.0;
  std::size_t thr_points = 100;
  std::optional<std::size_t> l4_n1, l4_n2;
  std::optional<double> l4_p, l4_q, l4_mu;
  thr->add_option("--alpha", thr_alpha);
  thr->add_option("--beta", thr_beta);
  thr->add_option("--delta", thr_delta);
  thr->add_option("--curve", thr_curve)->check(CLI::IsMember({"prop1"}));
  thr->add_option("--beta-min", thr_bmin);
  thr->add_option("--beta-max", thr_bmax);
  thr->add_option("--points", thr_points);
  thr->add_option("--n1", l4_n1, "success bound: community 1 size");
  thr->add_option("--n2", l4_n2);
  thr->add_option("--p", l4_p);
  thr->add_option("--q", l4_q);
  thr->add_option("--mu", l4_mu);

  // experiment
  auto* exp = app.add_subcommand("experiment", "run an (alpha,beta) grid");
  std::string exp_grid, exp_csv, exp_svg, exp_metric = "recovery", exp_overlay = "prop1", exp_method;
  std::size_t exp_jobs = 1;
  exp->add_option("--grid", exp_grid, "grid config file")->required();
  exp->add_option("--out-csv", exp_csv);
  exp->add_option("--out-svg", exp_svg);
  exp->add_option("--metric", exp_metric)->check(CLI::IsMember({"recovery", "runtime"}));
  exp->add_option("--overlay", exp_overlay)->check(CLI::IsMember({"none", "prop1", "conjecture"}));
  exp->add_option("--method", exp_method, "heatmap method filter (full|sketch)");
  exp->add_option("--jobs", exp_jobs);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      std::size_t n1 = gen_n1, n2 = gen_n2;
      if (gen_n > 0) {
        n1 = gen_n / 2;
        n2 = gen_n - n1;
      }
      sksdp_graph* g = nullptr;
      sksdp_partition* planted = nullptr;
      if (gen_alpha && gen_beta) {
        int clamped = 0;
        check(sksdp_sample_sbm_scaled(n1, n2, *gen_alpha, *gen_beta, gen_seed, &g, &planted, &clamped));
        if (clamped) std::cerr << "warning: edge rate exceeded 1 and was clamped\n";
      } else if (gen_p && gen_q) {
        check(sksdp_sample_sbm(n1, n2, *gen_p, *gen_q, gen_seed, &g, &planted));
      } else {
        throw CliError("give either --p/--q or --alpha/--beta");
      }
      GraphPtr graph(g);
      PartitionPtr part(planted);
      check(sksdp_graph_save(graph.get(), gen_graph.c_str()));
      if (!gen_partition.empty()) check(sksdp_partition_save(part.get(), gen_partition.c_str()));
    } else if (*solve) {
      GraphPtr graph = load_graph(solve_graph);
      const double mu = resolve_mu(solve_mu, graph.get());
      const sksdp_solver_options opts = solve_flags.options();
      sksdp_partition* cut = nullptr;
      sksdp_solve_info info{};
      check(sksdp_solve(graph.get(), mu, &opts, &cut, &info));
      PartitionPtr part(cut);
      if (!solve_out.empty()) check(sksdp_partition_save(part.get(), solve_out.c_str()));
      json j = solve_json(info);
      j["mu"] = mu;
      emit_json(j, solve_json_path);
    } else if (*cert) {
      GraphPtr graph = load_graph(cert_graph);
      PartitionPtr part = load_partition(cert_partition);
      const double mu = resolve_mu(cert_mu, graph.get());
      sksdp_certificate_info info{};
      check(sksdp_certify(graph.get(), part.get(), mu, &info));
      json j = certificate_json(info);
      j["mu"] = mu;
      emit_json(j, cert_json);
    } else if (*sketch) {
      GraphPtr graph = load_graph(sk_graph);
      sksdp_sketch_options opts;
      sksdp_sketch_options_default(&opts);
      if (sk_gamma == "auto") {
        if (!sk_alpha || !sk_beta) throw CliError("--gamma auto needs --alpha and --beta");
        opts.gamma = 0.0;
      } else {
        opts.gamma = std::stod(sk_gamma);
        if (!(opts.gamma > 0.0)) throw CliError("--gamma must be in (0,1]");
      }
      opts.alpha = sk_alpha.value_or(0.0);
      opts.beta = sk_beta.value_or(0.0);
      if (sk_mu != "auto") {
        opts.mu_auto = 0;
        opts.mu = resolve_mu(sk_mu, graph.get());
      }
      opts.seed = sk_flags.seed;
      opts.certify = sk_no_certify ? 0 : 1;
      opts.tie_rule = sk_tie == "fail" ? SKSDP_TIE_FAIL : sk_tie == "to-first" ? SKSDP_TIE_TO_FIRST : SKSDP_TIE_RANDOM;
      opts.solver = sk_flags.options();
      sksdp_sketch_result* raw = nullptr;
      check(sksdp_sketch(graph.get(), &opts, &raw));
      std::unique_ptr<sksdp_sketch_result, SketchDeleter> result(raw);
      sksdp_sketch_info info{};
      sksdp_sketch_result_info(result.get(), &info);
      if (!sk_out.empty()) check(sksdp_partition_save(sksdp_sketch_result_partition(result.get()), sk_out.c_str()));
      std::vector<uint32_t> unassigned(info.unassigned_count);
      sksdp_sketch_result_unassigned(result.get(), unassigned.data(), unassigned.size());
      json j = {{"gamma", info.gamma_used},
                {"mu", info.mu_used},
                {"sketch_size", info.sketch_size},
                {"fell_back_random", info.fell_back_random != 0},
                {"unassigned", unassigned},
                {"sdp", solve_json(info.sdp)},
                {"timings_ms",
                 {{"estimate", info.estimate_ms},
                  {"sample", info.sample_ms},
                  {"solve", info.solve_ms},
                  {"certify", info.certify_ms},
                  {"extend", info.extend_ms}}}};
      j["certificate"] = info.has_certificate ? certificate_json(info.certificate) : json(nullptr);
      emit_json(j, sk_json);
    } else if (*thr) {
      if (!thr_curve.empty()) {
        if (thr_points < 2 || !(thr_bmax >= thr_bmin)) throw CliError("invalid curve range");
        std::cout << "beta,alpha\n";
        for (std::size_t k = 0; k < thr_points; ++k) {
          const double beta = thr_bmin + (thr_bmax - thr_bmin) * static_cast<double>(k) / static_cast<double>(thr_points - 1);
          std::printf("%.17g,%.17g\n", beta, sksdp_prop1_curve_alpha(beta));
        }
        return 0;
      }
      json j;
      if (thr_alpha && thr_beta) {
        sksdp_thresholds t{};
        check(sksdp_thresholds_compute(*thr_alpha, *thr_beta, thr_delta.value_or(-1.0), &t));
        j["alpha"] = *thr_alpha;
        j["beta"] = *thr_beta;
        j["prop1_phase"] = sksdp_phase_string(t.phase);
        j["prop1_recoverable"] = t.prop1_recoverable != 0;
        j["lemma2_gamma"] = t.lemma2_gamma;
        j["theorem6_gamma"] = t.theorem6_gamma;
        j["conjecture_gamma"] = t.conjecture_gamma;
        j["auto_gamma"] = t.auto_gamma;
        if (t.has_delta) {
          j["delta"] = t.delta;
          j["corollary5_holds"] = t.corollary5_holds != 0;
        } else {
          j["corollary5_holds"] = nullptr;
        }
      }
      if (l4_n1 && l4_n2 && l4_p && l4_q && l4_mu) {
        double bound = 0.0;
        check(sksdp_lemma4_success_bound(*l4_n1, *l4_n2, *l4_p, *l4_q, *l4_mu, &bound));
        j["success_bound_raw"] = bound;
        j["success_bound"] = std::clamp(bound, 0.0, 1.0);
        j["success_bound_vacuous"] = bound <= 0.0;
      }
      if (j.is_null()) throw CliError("give --alpha and --beta, the success-bound inputs, or --curve prop1");
      emit_json(j, "-");
    } else if (*exp) {
      sksdp_grid_results* raw = nullptr;
      check(sksdp_experiment_run(exp_grid.c_str(), exp_jobs, &raw));
      std::unique_ptr<sksdp_grid_results, GridDeleter> results(raw);
      if (!exp_csv.empty()) check(sksdp_grid_results_write_csv(results.get(), exp_csv.c_str()));
      if (!exp_svg.empty()) {
        check(sksdp_grid_results_write_svg(results.get(), exp_svg.c_str(), exp_metric.c_str(), exp_overlay.c_str(),
                                           exp_method.empty() ? nullptr : exp_method.c_str()));
      }
      std::size_t ran = 0, skipped = 0, failed = 0, recovered = 0;
      sksdp_grid_results_counts(results.get(), &ran, &skipped, &failed, &recovered);
      std::cerr << "cells: " << sksdp_grid_results_size(results.get()) << " ran=" << ran << " skipped=" << skipped
                << " failed=" << failed << " recovered=" << recovered << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
