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

#include "sketchsdp/sketchsdp.h"

#include <cmath>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <utility>

#include "certificate.hpp"
#include "encoding.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "pipeline.hpp"
#include "sbm.hpp"
#include "sdp.hpp"
#include "theory.hpp"

struct sksdp_graph {
  sketchsdp::Graph graph;
};

struct sksdp_partition {
  sketchsdp::Partition partition;
};

struct sksdp_sketch_result {
  sketchsdp::PipelineResult result;
  sksdp_partition full;
  sksdp_partition sketch;
};

struct sksdp_grid_results {
  std::vector<sketchsdp::CellResult> cells;
};

namespace {

thread_local std::string last_error;

sksdp_status fail(sksdp_status status, const char* what) {
  last_error = what;
  return status;
}

template <typename F>
sksdp_status guarded(F&& body) noexcept {
  try {
    body();
    return SKSDP_OK;
  } catch (const sketchsdp::InvalidArgument& e) {
    return fail(SKSDP_ERR_INVALID_ARGUMENT, e.what());
  } catch (const sketchsdp::ParseError& e) {
    return fail(SKSDP_ERR_PARSE, e.what());
  } catch (const sketchsdp::IoError& e) {
    return fail(SKSDP_ERR_IO, e.what());
  } catch (const sketchsdp::EmptySideError& e) {
    return fail(SKSDP_ERR_EMPTY_SIDE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SKSDP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SKSDP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SKSDP_ERR_INTERNAL, "unknown error");
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw sketchsdp::InvalidArgument(message);
}

sketchsdp::SolverConfig to_config(const sksdp_solver_options* options) {
  sketchsdp::SolverConfig config;
  if (options != nullptr) {
    if (options->rank != 0) config.rank = options->rank;
    config.max_sweeps = options->max_sweeps;
    config.objective_tolerance = options->objective_tolerance;
    config.seed = options->seed;
  }
  config.validate();
  return config;
}

sksdp_solve_info to_info(const sketchsdp::SdpSolution& sol) {
  sksdp_solve_info info{};
  info.objective = sol.objective;
  info.rank_one_gap = sol.rank_one_gap;
  info.sweeps_used = sol.sweeps_used;
  info.converged = sol.converged ? 1 : 0;
  info.rank = static_cast<size_t>(sol.factors.rows());
  return info;
}

sksdp_certificate_info to_info(const sketchsdp::CertificateReport& report) {
  sksdp_certificate_info info{};
  switch (report.verdict) {
    case sketchsdp::Verdict::kCertified:
      info.verdict = SKSDP_CERTIFIED;
      break;
    case sketchsdp::Verdict::kNotCertified:
      info.verdict = SKSDP_NOT_CERTIFIED;
      break;
    case sketchsdp::Verdict::kInconclusive:
      info.verdict = SKSDP_INCONCLUSIVE;
      break;
  }
  info.lambda2_lower = report.lambda2_lower;
  info.lambda2_estimate = report.lambda2_estimate;
  info.zg_residual = report.z_g_residual;
  info.z_scale = report.z_scale;
  info.iterations = report.iterations;
  return info;
}

}  // namespace

extern "C" {

const char* sksdp_version(void) { return "0.1.0"; }

const char* sksdp_last_error(void) { return last_error.c_str(); }

const char* sksdp_status_string(sksdp_status status) {
  switch (status) {
    case SKSDP_OK:
      return "ok";
    case SKSDP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SKSDP_ERR_IO:
      return "i/o error";
    case SKSDP_ERR_PARSE:
      return "parse error";
    case SKSDP_ERR_EMPTY_SIDE:
      return "empty sketch side";
    case SKSDP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

sksdp_status sksdp_graph_from_edges(size_t num_vertices, const uint32_t* edges, size_t num_edges, sksdp_graph** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(edges != nullptr || num_edges == 0, "edges must not be null");
    std::vector<sketchsdp::Edge> list(num_edges);
    for (size_t k = 0; k < num_edges; ++k) list[k] = {edges[2 * k], edges[2 * k + 1]};
    *out = new sksdp_graph{sketchsdp::Graph::from_edges(num_vertices, list)};
  });
}

sksdp_status sksdp_graph_load(const char* path, sksdp_graph** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "path and out must not be null");
    *out = new sksdp_graph{sketchsdp::load_edge_list(path)};
  });
}

sksdp_status sksdp_graph_save(const sksdp_graph* graph, const char* path) {
  return guarded([&] {
    require(graph != nullptr && path != nullptr, "graph and path must not be null");
    sketchsdp::save_edge_list(graph->graph, path);
  });
}

void sksdp_graph_free(sksdp_graph* graph) { delete graph; }

size_t sksdp_graph_num_vertices(const sksdp_graph* graph) { return graph ? graph->graph.num_vertices() : 0; }

size_t sksdp_graph_num_edges(const sksdp_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

sksdp_status sksdp_sample_sbm(size_t n1, size_t n2, double p, double q, uint64_t seed, sksdp_graph** graph,
                              sksdp_partition** planted) {
  return guarded([&] {
    require(graph != nullptr, "graph must not be null");
    auto drawn = sketchsdp::sample_sbm(sketchsdp::SbmParams::general(n1, n2, p, q), seed);
    auto* g = new sksdp_graph{std::move(drawn.graph)};
    if (planted != nullptr) {
      try {
        *planted = new sksdp_partition{std::move(drawn.planted)};
      } catch (...) {
        delete g;
        throw;
      }
    }
    *graph = g;
  });
}

sksdp_status sksdp_sample_sbm_scaled(size_t n1, size_t n2, double alpha, double beta, uint64_t seed,
                                     sksdp_graph** graph, sksdp_partition** planted, int* clamped) {
  sketchsdp::ScaledRates rates;
  const sksdp_status st = guarded([&] { rates = sketchsdp::to_sbm(alpha, beta, n1, n2); });
  if (st != SKSDP_OK) return st;
  if (clamped != nullptr) *clamped = rates.clamped ? 1 : 0;
  return sksdp_sample_sbm(n1, n2, rates.params.p, rates.params.q, seed, graph, planted);
}

sksdp_status sksdp_estimate_mu(const sksdp_graph* graph, double* mu) {
  return guarded([&] {
    require(graph != nullptr && mu != nullptr, "graph and mu must not be null");
    *mu = sketchsdp::estimate_mu(graph->graph).mu;
  });
}

sksdp_status sksdp_partition_new(const uint32_t* vertices, const int* signs, size_t count, sksdp_partition** out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    require(count == 0 || (vertices != nullptr && signs != nullptr), "vertices and signs must not be null");
    std::vector<std::pair<sketchsdp::VertexId, int>> a(count);
    for (size_t i = 0; i < count; ++i) a[i] = {vertices[i], signs[i]};
    *out = new sksdp_partition{sketchsdp::Partition(std::move(a))};
  });
}

sksdp_status sksdp_partition_load(const char* path, sksdp_partition** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "path and out must not be null");
    *out = new sksdp_partition{sketchsdp::load_partition(path)};
  });
}

sksdp_status sksdp_partition_save(const sksdp_partition* partition, const char* path) {
  return guarded([&] {
    require(partition != nullptr && path != nullptr, "partition and path must not be null");
    sketchsdp::save_partition(partition->partition, path);
  });
}

void sksdp_partition_free(sksdp_partition* partition) { delete partition; }

size_t sksdp_partition_size(const sksdp_partition* partition) { return partition ? partition->partition.size() : 0; }

sksdp_status sksdp_partition_get(const sksdp_partition* partition, size_t index, uint32_t* vertex, int* sign) {
  return guarded([&] {
    require(partition != nullptr, "partition must not be null");
    require(index < partition->partition.size(), "index out of range");
    if (vertex) *vertex = partition->partition.vertices()[index];
    if (sign) *sign = partition->partition.signs()[index];
  });
}

int sksdp_partition_equal_up_to_flip(const sksdp_partition* a, const sksdp_partition* b) {
  if (a == nullptr || b == nullptr) return 0;
  return sketchsdp::same_up_to_flip(a->partition, b->partition) ? 1 : 0;
}

sksdp_status sksdp_objective_value(const sksdp_graph* graph, double mu, const sksdp_partition* partition,
                                   double* value) {
  return guarded([&] {
    require(graph != nullptr && partition != nullptr && value != nullptr, "arguments must not be null");
    *value = sketchsdp::objective_value(graph->graph, mu, partition->partition);
  });
}

void sksdp_solver_options_default(sksdp_solver_options* options) {
  if (options == nullptr) return;
  const sketchsdp::SolverConfig config;
  options->rank = 0;
  options->max_sweeps = config.max_sweeps;
  options->objective_tolerance = config.objective_tolerance;
  options->seed = config.seed;
}

sksdp_status sksdp_solve(const sksdp_graph* graph, double mu, const sksdp_solver_options* options,
                         sksdp_partition** cut, sksdp_solve_info* info) {
  return guarded([&] {
    require(graph != nullptr, "graph must not be null");
    const sketchsdp::SdpSolution sol = sketchsdp::solve_sdp(graph->graph, mu, to_config(options));
    if (info) *info = to_info(sol);
    if (cut) *cut = new sksdp_partition{sol.rounded_cut};
  });
}

const char* sksdp_verdict_string(sksdp_verdict verdict) {
  switch (verdict) {
    case SKSDP_CERTIFIED:
      return "CERTIFIED";
    case SKSDP_NOT_CERTIFIED:
      return "NOT_CERTIFIED";
    case SKSDP_INCONCLUSIVE:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

sksdp_status sksdp_certify(const sksdp_graph* graph, const sksdp_partition* partition, double mu,
                           sksdp_certificate_info* info) {
  return guarded([&] {
    require(graph != nullptr && partition != nullptr && info != nullptr, "arguments must not be null");
    *info = to_info(sketchsdp::check_certificate(graph->graph, partition->partition, mu));
  });
}

void sksdp_sketch_options_default(sksdp_sketch_options* options) {
  if (options == nullptr) return;
  options->gamma = 0.0;
  options->alpha = 0.0;
  options->beta = 0.0;
  options->mu_auto = 1;
  options->mu = 0.0;
  options->seed = 0;
  options->certify = 1;
  options->tie_rule = SKSDP_TIE_FAIL;
  sksdp_solver_options_default(&options->solver);
}

sksdp_status sksdp_sketch(const sksdp_graph* graph, const sksdp_sketch_options* options, sksdp_sketch_result** out) {
  return guarded([&] {
    require(graph != nullptr && options != nullptr && out != nullptr, "arguments must not be null");
    sketchsdp::SketchConfig config;
    if (options->gamma > 0.0) {
      config.gamma = options->gamma;
    } else {
      config.signal = sketchsdp::SignalStrength{options->alpha, options->beta};
    }
    if (!options->mu_auto) config.mu = options->mu;
    config.seed = options->seed;
    config.certify = options->certify != 0;
    switch (options->tie_rule) {
      case SKSDP_TIE_FAIL:
        config.tie_rule = sketchsdp::TieRule::kFail;
        break;
      case SKSDP_TIE_TO_FIRST:
        config.tie_rule = sketchsdp::TieRule::kToFirst;
        break;
      case SKSDP_TIE_RANDOM:
        config.tie_rule = sketchsdp::TieRule::kRandom;
        break;
      default:
        throw sketchsdp::InvalidArgument("unknown tie rule");
    }
    config.solver = to_config(&options->solver);
    auto* r = new sksdp_sketch_result{sketchsdp::sketch_and_solve(graph->graph, config), {}, {}};
    r->full.partition = r->result.full_partition;
    r->sketch.partition = r->result.sketch_partition;
    *out = r;
  });
}

void sksdp_sketch_result_free(sksdp_sketch_result* result) { delete result; }

void sksdp_sketch_result_info(const sksdp_sketch_result* result, sksdp_sketch_info* info) {
  if (result == nullptr || info == nullptr) return;
  const auto& r = result->result;
  *info = sksdp_sketch_info{};
  info->gamma_used = r.gamma_used;
  info->mu_used = r.mu_used;
  info->sketch_size = r.sketch_vertices.size();
  info->fell_back_random = r.fell_back_random ? 1 : 0;
  info->unassigned_count = r.unassigned.size();
  info->sdp = to_info(r.sdp);
  info->has_certificate = r.certificate.has_value() ? 1 : 0;
  if (r.certificate) info->certificate = to_info(*r.certificate);
  info->estimate_ms = r.timings.estimate_ms;
  info->sample_ms = r.timings.sample_ms;
  info->solve_ms = r.timings.solve_ms;
  info->certify_ms = r.timings.certify_ms;
  info->extend_ms = r.timings.extend_ms;
}

const sksdp_partition* sksdp_sketch_result_partition(const sksdp_sketch_result* result) {
  return result ? &result->full : nullptr;
}

const sksdp_partition* sksdp_sketch_result_sketch_partition(const sksdp_sketch_result* result) {
  return result ? &result->sketch : nullptr;
}

size_t sksdp_sketch_result_unassigned(const sksdp_sketch_result* result, uint32_t* out, size_t capacity) {
  if (result == nullptr) return 0;
  const auto& u = result->result.unassigned;
  for (size_t i = 0; out != nullptr && i < u.size() && i < capacity; ++i) out[i] = u[i];
  return u.size();
}

const char* sksdp_phase_string(sksdp_phase phase) {
  switch (phase) {
    case SKSDP_RECOVERABLE:
      return "RECOVERABLE";
    case SKSDP_IMPOSSIBLE:
      return "IMPOSSIBLE";
    case SKSDP_BOUNDARY:
      return "BOUNDARY";
  }
  return "IMPOSSIBLE";
}

sksdp_status sksdp_thresholds_compute(double alpha, double beta, double delta, sksdp_thresholds* out) {
  return guarded([&] {
    require(out != nullptr, "out must not be null");
    std::optional<double> d;
    if (delta >= 0.0) d = delta;
    const sketchsdp::ThresholdReport r = sketchsdp::threshold_report(alpha, beta, d);
    *out = sksdp_thresholds{};
    switch (r.phase) {
      case sketchsdp::Phase::kRecoverable:
        out->phase = SKSDP_RECOVERABLE;
        break;
      case sketchsdp::Phase::kImpossible:
        out->phase = SKSDP_IMPOSSIBLE;
        break;
      case sketchsdp::Phase::kBoundary:
        out->phase = SKSDP_BOUNDARY;
        break;
    }
    out->prop1_recoverable = r.prop1_recoverable ? 1 : 0;
    out->lemma2_gamma = r.lemma2_gamma;
    out->theorem6_gamma = r.theorem6_gamma;
    out->conjecture_gamma = r.conjecture_gamma;
    out->auto_gamma = sketchsdp::auto_gamma(alpha, beta);
    out->has_delta = r.delta ? 1 : 0;
    out->delta = r.delta.value_or(0.0);
    out->corollary5_holds = r.corollary5_holds.value_or(false) ? 1 : 0;
  });
}

sksdp_status sksdp_lemma4_success_bound(size_t n1, size_t n2, double p, double q, double mu, double* bound) {
  return guarded([&] {
    require(bound != nullptr, "bound must not be null");
    *bound = sketchsdp::lemma4_success_bound(n1, n2, p, q, mu);
  });
}

double sksdp_prop1_curve_alpha(double beta) {
  if (!(beta >= 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return sketchsdp::prop1_curve_alpha(beta);
}

sksdp_status sksdp_experiment_run(const char* grid_config_path, size_t jobs, sksdp_grid_results** out) {
  return guarded([&] {
    require(grid_config_path != nullptr && out != nullptr, "arguments must not be null");
    const sketchsdp::GridSpec spec = sketchsdp::load_grid_spec(grid_config_path);
    *out = new sksdp_grid_results{sketchsdp::run_grid(spec, jobs)};
  });
}

void sksdp_grid_results_free(sksdp_grid_results* results) { delete results; }

size_t sksdp_grid_results_size(const sksdp_grid_results* results) { return results ? results->cells.size() : 0; }

void sksdp_grid_results_counts(const sksdp_grid_results* results, size_t* ran, size_t* skipped, size_t* failed,
                               size_t* recovered) {
  size_t counts[4] = {0, 0, 0, 0};
  if (results != nullptr) {
    for (const auto& c : results->cells) {
      switch (c.status) {
        case sketchsdp::CellStatus::kOk:
          ++counts[0];
          break;
        case sketchsdp::CellStatus::kSkipped:
          ++counts[1];
          break;
        case sketchsdp::CellStatus::kError:
          ++counts[2];
          break;
      }
      counts[3] += c.recovered ? 1 : 0;
    }
  }
  if (ran) *ran = counts[0];
  if (skipped) *skipped = counts[1];
  if (failed) *failed = counts[2];
  if (recovered) *recovered = counts[3];
}

sksdp_status sksdp_grid_results_write_csv(const sksdp_grid_results* results, const char* path) {
  return guarded([&] {
    require(results != nullptr && path != nullptr, "arguments must not be null");
    sketchsdp::emit_csv_file(results->cells, path);
  });
}

sksdp_status sksdp_grid_results_write_svg(const sksdp_grid_results* results, const char* path, const char* metric,
                                          const char* overlay, const char* method) {
  return guarded([&] {
    require(results != nullptr && path != nullptr, "arguments must not be null");
    sketchsdp::HeatmapOptions options;
    if (metric != nullptr) {
      auto m = sketchsdp::parse_metric(metric);
      require(m.has_value(), "unknown heatmap metric");
      options.metric = *m;
    }
    if (overlay != nullptr) {
      auto o = sketchsdp::parse_overlay(overlay);
      require(o.has_value(), "unknown heatmap overlay");
      options.overlay = *o;
    }
    if (method != nullptr) {
      auto m = sketchsdp::parse_method(method);
      require(m.has_value(), "unknown method");
      options.method = *m;
    }
    sketchsdp::emit_heatmap_svg_file(results->cells, options, path);
  });
}

}  // extern "C"
