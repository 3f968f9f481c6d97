// Copyright 2026 The sparsekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to sparsekit. Every function returns an sk_status; on failure
 * sk_last_error() describes the problem for the calling thread. Objects are
 * opaque and released with their _free function (NULL is accepted). */

#ifndef SPARSEKIT_H
#define SPARSEKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(SPARSEKIT_BUILDING)
#define SK_API __attribute__((visibility("default")))
#else
#define SK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sk_status {
  SK_OK = 0,
  SK_INVALID_ARGUMENT = 1,
  SK_DIMENSION_MISMATCH = 2,
  SK_SINGULAR = 3,
  SK_DEGENERATE = 4,
  SK_GUARD_EXCEEDED = 5,
  SK_IO = 6,
  SK_PARSE = 7,
  SK_INTERNAL = 99
} sk_status;

typedef struct sk_matrix sk_matrix;
typedef struct sk_result sk_result;
typedef struct sk_trial sk_trial;
typedef struct sk_curve sk_curve;
typedef struct sk_phase sk_phase;
typedef struct sk_online sk_online;
typedef struct sk_frame sk_frame;
typedef struct sk_gabor sk_gabor;

SK_API const char* sk_version(void);
SK_API const char* sk_last_error(void);
SK_API const char* sk_status_string(sk_status s);

/* ---- matrices ---------------------------------------------------------- */

/* ensemble: gaussian, bernoulli, ternary, sphere, partial-orthonormal. */
SK_API sk_status sk_matrix_generate(const char* ensemble, size_t rows, size_t cols, uint64_t seed,
                                    int normalize, sk_matrix** out);
/* `data` is row-major rows * cols. */
SK_API sk_status sk_matrix_from_data(size_t rows, size_t cols, const double* data, int normalize,
                                     sk_matrix** out);
SK_API sk_status sk_matrix_read_csv(const char* path, sk_matrix** out);
/* `meta`: optional newline-separated key=value lines added to the header. */
SK_API sk_status sk_matrix_write_csv(const sk_matrix* m, const char* path, const char* meta);
SK_API size_t sk_matrix_rows(const sk_matrix* m);
SK_API size_t sk_matrix_cols(const sk_matrix* m);
SK_API sk_status sk_matrix_copy(const sk_matrix* m, double* out, size_t len);
SK_API void sk_matrix_free(sk_matrix* m);

SK_API sk_status sk_matrix_coherence(const sk_matrix* m, double* out);
SK_API sk_status sk_welch_bound(size_t rows, size_t cols, double* out);
/* max_cols / max_subsets of 0 select the defaults (20, 200000). */
SK_API sk_status sk_matrix_spark(const sk_matrix* m, size_t max_cols, size_t max_subsets,
                                 size_t* out);
SK_API sk_status sk_matrix_rip(const sk_matrix* m, size_t k, size_t max_cols, size_t max_subsets,
                               double* out);

/* ---- operators --------------------------------------------------------- */

/* rule: soft, hard, topk (param = k), scad, garrote. */
SK_API sk_status sk_threshold(const char* rule, double param, const double* in, double* out,
                              size_t len);
SK_API sk_status sk_project_weighted_l1_ball(const double* weights, double radius,
                                             const double* in, double* out, size_t len);

/* ---- batch solvers ----------------------------------------------------- */

typedef struct sk_solver_opts {
  const char* algorithm; /* omp, cosamp, sp, ista, fista, iht, cd, tst, reweighted */
  double lambda;
  double lambda_scale; /* > 0: lambda = lambda_scale * ||X^T y||_inf */
  double step_mu;      /* 0: automatic */
  double step_scale;   /* > 0: step = step_scale / lambda_max(X^T X) */
  size_t sparsity_k;   /* 0: true k in trials, required by greedy solvers in sk_solve */
  size_t csmp_t;       /* 0: algorithm default */
  size_t max_iters;
  double tol;
  double reweight_epsilon;
  size_t reweight_rounds;
  int debias;
  int omp_k_steps;
  int adaptive_step; /* IHT: residual-maximizing step per iteration */
} sk_solver_opts;

SK_API void sk_solver_opts_default(sk_solver_opts* o);

SK_API sk_status sk_solve(const sk_matrix* x, const double* y, size_t len,
                          const sk_solver_opts* opts, sk_result** out);
SK_API size_t sk_result_length(const sk_result* r);
SK_API sk_status sk_result_estimate(const sk_result* r, double* out, size_t len);
SK_API size_t sk_result_iterations(const sk_result* r);
SK_API double sk_result_residual(const sk_result* r);
SK_API int sk_result_converged(const sk_result* r);
SK_API void sk_result_free(sk_result* r);

/* ---- experiments ------------------------------------------------------- */

typedef struct sk_trial_opts {
  const char* matrix_ensemble;
  int normalize;
  const char* values;       /* cars, gaussian, uniform, laplace, cauchy */
  const char* support_rule; /* exact, bernoulli */
  size_t n;
  size_t l;
  size_t k;
  double noise_sigma;
  double success_tol;
  uint64_t seed;
  sk_solver_opts solver;
} sk_trial_opts;

SK_API void sk_trial_opts_default(sk_trial_opts* o);

SK_API sk_status sk_trial_run(const sk_trial_opts* opts, sk_trial** out);
SK_API int sk_trial_success(const sk_trial* t);
SK_API double sk_trial_relative_error(const sk_trial* t);
SK_API size_t sk_trial_iterations(const sk_trial* t);
/* One-line {"key": value} summary; returns the full length like snprintf. */
SK_API size_t sk_trial_summary(const sk_trial* t, char* buf, size_t cap);
/* Columns index, truth, estimate. */
SK_API sk_status sk_trial_write_csv(const sk_trial* t, const char* path, const char* meta);
SK_API void sk_trial_free(sk_trial* t);

/* Sweeps k = k_min..k_max (k_max 0: n) with `trials` runs per point.
 * workers 0: SPARSEKIT_WORKERS or the processor count. */
SK_API sk_status sk_curve_run(const sk_trial_opts* base, size_t trials, size_t k_min,
                              size_t k_max, size_t workers, sk_curve** out);
SK_API size_t sk_curve_size(const sk_curve* c);
SK_API sk_status sk_curve_point(const sk_curve* c, size_t i, size_t* k, size_t* successes,
                                size_t* trials);
SK_API sk_status sk_curve_write_csv(const sk_curve* c, const char* path, const char* meta);
SK_API void sk_curve_free(sk_curve* c);

/* base.n and base.k are ignored; cells set them from alpha and beta. */
SK_API sk_status sk_phase_run(const sk_trial_opts* base, size_t grid, size_t trials,
                              size_t workers, sk_phase** out);
SK_API size_t sk_phase_grid(const sk_phase* p);
SK_API sk_status sk_phase_cell(const sk_phase* p, size_t row, size_t col, double* alpha,
                               double* beta, size_t* successes, size_t* trials);
SK_API sk_status sk_phase_write_csv(const sk_phase* p, const char* path, const char* meta);
SK_API sk_status sk_phase_write_pgm(const sk_phase* p, const char* path, const char* meta);
SK_API sk_status sk_phase_write_timing(const sk_phase* p, const char* path);
SK_API void sk_phase_free(sk_phase* p);

typedef struct sk_online_opts {
  size_t length;
  size_t sparsity;
  size_t samples;
  size_t change_at;
  size_t changed_coefficients;
  double noise_variance;
  int haar;
  uint64_t seed;
  /* AdCoSaMP */
  size_t adcosamp_k;
  double lms_mu;
  int normalized_lms;
  double forgetting_beta;
  /* SpAPSM */
  size_t spapsm_k;
  size_t q_slabs;
  double slab_epsilon;
  double extrapolation_scale;
  double weight_epsilon;
  double ball_radius;
  int use_weights;
  size_t runs;    /* realizations averaged into each curve */
  size_t workers; /* 0: automatic */
} sk_online_opts;

typedef struct sk_trace_summary {
  double start_db;
  double pre_change_db;
  double spike_db;
  double steady_state_db;
  long reconverge_samples; /* -1 if never */
} sk_trace_summary;

SK_API void sk_online_opts_default(sk_online_opts* o);
SK_API sk_status sk_online_run(const sk_online_opts* opts, sk_online** out);
/* algo: adcosamp or spapsm. Traces are log10 of the run-averaged MSE. */
SK_API size_t sk_online_length(const sk_online* o);
SK_API sk_status sk_online_trace(const sk_online* o, const char* algo, double* out, size_t len);
SK_API sk_status sk_online_summary(const sk_online* o, const char* algo, sk_trace_summary* out);
SK_API sk_status sk_online_write_csv(const sk_online* o, const char* algo, const char* path,
                                     const char* meta);
SK_API void sk_online_free(sk_online* o);

/* ---- frames ------------------------------------------------------------ */

/* `atoms` is row-major dim x count; columns are the atoms. */
SK_API sk_status sk_frame_from_atoms(size_t dim, size_t count, const double* atoms,
                                     sk_frame** out);
SK_API sk_status sk_frame_gabor(size_t length, double sigma, size_t time_step, size_t freq_step,
                                sk_frame** out);
SK_API size_t sk_frame_dim(const sk_frame* f);
SK_API size_t sk_frame_size(const sk_frame* f);
SK_API sk_status sk_frame_bounds(const sk_frame* f, double* lower, double* upper, int* tight);
/* Row-major dim x count. */
SK_API sk_status sk_frame_dual(const sk_frame* f, double* out, size_t len);
SK_API sk_status sk_frame_write_csv(const sk_frame* f, const char* path, const char* meta);
SK_API void sk_frame_free(sk_frame* f);

typedef struct sk_gabor_opts {
  size_t length;
  double sigma; /* 0: length / 16 */
  size_t time_step;
  size_t freq_step;
  size_t measurements; /* 0: length / 8 */
  double lambda_scale;
  size_t max_iters;
  uint64_t seed;
} sk_gabor_opts;

SK_API void sk_gabor_opts_default(sk_gabor_opts* o);
SK_API sk_status sk_gabor_demo(const sk_gabor_opts* opts, sk_gabor** out);
SK_API double sk_gabor_relative_error(const sk_gabor* g);
SK_API size_t sk_gabor_atoms(const sk_gabor* g);
/* Writes <prefix>_original.pgm, <prefix>_recovered.pgm and <prefix>_decay.csv. */
SK_API sk_status sk_gabor_write(const sk_gabor* g, const char* prefix, const char* meta);
SK_API void sk_gabor_free(sk_gabor* g);

#ifdef __cplusplus
}
#endif

#endif /* SPARSEKIT_H */
