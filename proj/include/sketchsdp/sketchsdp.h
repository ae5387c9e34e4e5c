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

/*
 * sketchsdp C API.
 *
 * Planted two-community recovery by sketch-and-solve semidefinite
 * programming. Objects are opaque handles created by *_new / *_load /
 * producer functions and released by the matching *_free. Every fallible
 * call returns an sksdp_status; on failure a description is available from
 * sksdp_last_error() on the same thread until the next failing call.
 *
 * Handles are immutable after creation and may be shared across threads.
 */
#ifndef SKETCHSDP_SKETCHSDP_H
#define SKETCHSDP_SKETCHSDP_H

#include <stddef.h>
#include <stdint.h>

#if defined(SKSDP_BUILDING_LIBRARY)
#define SKSDP_API __attribute__((visibility("default")))
#else
#define SKSDP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sksdp_status {
  SKSDP_OK = 0,
  SKSDP_ERR_INVALID_ARGUMENT = 1,
  SKSDP_ERR_IO = 2,
  SKSDP_ERR_PARSE = 3,
  /* a sketch lost one community entirely (vote extension undefined) */
  SKSDP_ERR_EMPTY_SIDE = 4,
  SKSDP_ERR_INTERNAL = 5
} sksdp_status;

typedef struct sksdp_graph sksdp_graph;
typedef struct sksdp_partition sksdp_partition;
typedef struct sksdp_sketch_result sksdp_sketch_result;
typedef struct sksdp_grid_results sksdp_grid_results;

SKSDP_API const char* sksdp_version(void);
SKSDP_API const char* sksdp_last_error(void);
SKSDP_API const char* sksdp_status_string(sksdp_status status);

/* ---- graphs ------------------------------------------------------------ */

/* `edges` holds 2*num_edges vertex indices (u0 v0 u1 v1 ...). */
SKSDP_API sksdp_status sksdp_graph_from_edges(size_t num_vertices, const uint32_t* edges, size_t num_edges,
                                              sksdp_graph** out);
SKSDP_API sksdp_status sksdp_graph_load(const char* path, sksdp_graph** out);
SKSDP_API sksdp_status sksdp_graph_save(const sksdp_graph* graph, const char* path);
SKSDP_API void sksdp_graph_free(sksdp_graph* graph);
SKSDP_API size_t sksdp_graph_num_vertices(const sksdp_graph* graph);
SKSDP_API size_t sksdp_graph_num_edges(const sksdp_graph* graph);

/* SBM(n1, n2, p, q); vertices 0..n1-1 form the first community. */
SKSDP_API sksdp_status sksdp_sample_sbm(size_t n1, size_t n2, double p, double q, uint64_t seed,
                                        sksdp_graph** graph, sksdp_partition** planted);
/* Same with p = alpha ln(n)/n, q = beta ln(n)/n, n = n1 + n2. `clamped`
 * (optional) is set to 1 when a rate had to be clamped to 1. */
SKSDP_API sksdp_status sksdp_sample_sbm_scaled(size_t n1, size_t n2, double alpha, double beta, uint64_t seed,
                                               sksdp_graph** graph, sksdp_partition** planted, int* clamped);

/* |E| / C(n, 2). */
SKSDP_API sksdp_status sksdp_estimate_mu(const sksdp_graph* graph, double* mu);

/* ---- partitions -------------------------------------------------------- */

/* `vertices` and `signs` (+1/-1) of equal length. */
SKSDP_API sksdp_status sksdp_partition_new(const uint32_t* vertices, const int* signs, size_t count,
                                           sksdp_partition** out);
SKSDP_API sksdp_status sksdp_partition_load(const char* path, sksdp_partition** out);
SKSDP_API sksdp_status sksdp_partition_save(const sksdp_partition* partition, const char* path);
SKSDP_API void sksdp_partition_free(sksdp_partition* partition);
SKSDP_API size_t sksdp_partition_size(const sksdp_partition* partition);
/* Entries are ordered by vertex id. */
SKSDP_API sksdp_status sksdp_partition_get(const sksdp_partition* partition, size_t index, uint32_t* vertex,
                                           int* sign);
/* 1 when both cover the same vertices and agree up to a global flip. */
SKSDP_API int sksdp_partition_equal_up_to_flip(const sksdp_partition* a, const sksdp_partition* b);
/* g^T A g - mu (1^T g)^2 */
SKSDP_API sksdp_status sksdp_objective_value(const sksdp_graph* graph, double mu, const sksdp_partition* partition,
                                             double* value);

/* ---- SDP solve --------------------------------------------------------- */

typedef struct sksdp_solver_options {
  size_t rank; /* 0 = auto: min(n, ceil(sqrt(2n)) + 1) */
  size_t max_sweeps;
  double objective_tolerance;
  uint64_t seed;
} sksdp_solver_options;

SKSDP_API void sksdp_solver_options_default(sksdp_solver_options* options);

typedef struct sksdp_solve_info {
  double objective;
  double rank_one_gap;
  size_t sweeps_used;
  int converged;
  size_t rank;
} sksdp_solve_info;

/* Solves the (A, mu)-SDP and returns the rounded cut. */
SKSDP_API sksdp_status sksdp_solve(const sksdp_graph* graph, double mu, const sksdp_solver_options* options,
                                   sksdp_partition** cut, sksdp_solve_info* info);

/* ---- dual certificate -------------------------------------------------- */

typedef enum sksdp_verdict {
  SKSDP_CERTIFIED = 0,
  SKSDP_NOT_CERTIFIED = 1,
  SKSDP_INCONCLUSIVE = 2
} sksdp_verdict;

typedef struct sksdp_certificate_info {
  sksdp_verdict verdict;
  double lambda2_lower; /* -inf when no bound was established */
  double lambda2_estimate;
  double zg_residual;
  double z_scale;
  size_t iterations;
} sksdp_certificate_info;

SKSDP_API const char* sksdp_verdict_string(sksdp_verdict verdict);
SKSDP_API sksdp_status sksdp_certify(const sksdp_graph* graph, const sksdp_partition* partition, double mu,
                                     sksdp_certificate_info* info);

/* ---- sketch-and-solve -------------------------------------------------- */

typedef enum sksdp_tie_rule { SKSDP_TIE_FAIL = 0, SKSDP_TIE_TO_FIRST = 1, SKSDP_TIE_RANDOM = 2 } sksdp_tie_rule;

typedef struct sksdp_sketch_options {
  double gamma;      /* sampling rate in (0,1]; <= 0 selects the automatic rule */
  double alpha;      /* signal strength, needed for automatic gamma */
  double beta;
  int mu_auto;       /* nonzero: estimate mu on the full graph */
  double mu;         /* used when mu_auto == 0 */
  uint64_t seed;
  int certify;       /* nonzero: require a dual certificate */
  sksdp_tie_rule tie_rule;
  sksdp_solver_options solver;
} sksdp_sketch_options;

SKSDP_API void sksdp_sketch_options_default(sksdp_sketch_options* options);

typedef struct sksdp_sketch_info {
  double gamma_used;
  double mu_used;
  size_t sketch_size;
  int fell_back_random;
  size_t unassigned_count;
  sksdp_solve_info sdp;
  int has_certificate;
  sksdp_certificate_info certificate;
  double estimate_ms;
  double sample_ms;
  double solve_ms;
  double certify_ms;
  double extend_ms;
} sksdp_sketch_info;

SKSDP_API sksdp_status sksdp_sketch(const sksdp_graph* graph, const sksdp_sketch_options* options,
                                    sksdp_sketch_result** out);
SKSDP_API void sksdp_sketch_result_free(sksdp_sketch_result* result);
SKSDP_API void sksdp_sketch_result_info(const sksdp_sketch_result* result, sksdp_sketch_info* info);
/* Borrowed; valid until the result is freed. Covers assigned vertices only. */
SKSDP_API const sksdp_partition* sksdp_sketch_result_partition(const sksdp_sketch_result* result);
SKSDP_API const sksdp_partition* sksdp_sketch_result_sketch_partition(const sksdp_sketch_result* result);
SKSDP_API size_t sksdp_sketch_result_unassigned(const sksdp_sketch_result* result, uint32_t* out, size_t capacity);

/* ---- closed-form thresholds -------------------------------------------- */

typedef enum sksdp_phase { SKSDP_RECOVERABLE = 0, SKSDP_IMPOSSIBLE = 1, SKSDP_BOUNDARY = 2 } sksdp_phase;

typedef struct sksdp_thresholds {
  sksdp_phase phase;
  int prop1_recoverable;
  double lemma2_gamma;
  double theorem6_gamma;
  double conjecture_gamma;
  double auto_gamma;
  int has_delta;
  double delta;
  int corollary5_holds;
} sksdp_thresholds;

SKSDP_API const char* sksdp_phase_string(sksdp_phase phase);
/* delta < 0 leaves the imbalance predicate unset. */
SKSDP_API sksdp_status sksdp_thresholds_compute(double alpha, double beta, double delta, sksdp_thresholds* out);
SKSDP_API sksdp_status sksdp_lemma4_success_bound(size_t n1, size_t n2, double p, double q, double mu,
                                                  double* bound);
/* alpha = (sqrt(beta) + sqrt(2))^2 */
SKSDP_API double sksdp_prop1_curve_alpha(double beta);

/* ---- experiments ------------------------------------------------------- */

SKSDP_API sksdp_status sksdp_experiment_run(const char* grid_config_path, size_t jobs, sksdp_grid_results** out);
SKSDP_API void sksdp_grid_results_free(sksdp_grid_results* results);
SKSDP_API size_t sksdp_grid_results_size(const sksdp_grid_results* results);
/* Counts of cells that ran, were skipped, or failed, and that recovered. */
SKSDP_API void sksdp_grid_results_counts(const sksdp_grid_results* results, size_t* ran, size_t* skipped,
                                         size_t* failed, size_t* recovered);
SKSDP_API sksdp_status sksdp_grid_results_write_csv(const sksdp_grid_results* results, const char* path);
/* metric: "recovery" | "runtime"; overlay: "none" | "prop1" | "conjecture";
 * method: "full" | "sketch" | NULL for all cells. */
SKSDP_API sksdp_status sksdp_grid_results_write_svg(const sksdp_grid_results* results, const char* path,
                                                    const char* metric, const char* overlay, const char* method);

#ifdef __cplusplus
}
#endif

#endif /* SKETCHSDP_SKETCHSDP_H */
