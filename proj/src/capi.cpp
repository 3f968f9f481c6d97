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

#include "sparsekit/sparsekit.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "sparsekit/dictionaries.hpp"
#include "sparsekit/ensembles.hpp"
#include "sparsekit/error.hpp"
#include "sparsekit/harness.hpp"
#include "sparsekit/io.hpp"
#include "sparsekit/operators.hpp"
#include "sparsekit/solvers_batch.hpp"
#include "sparsekit/solvers_online.hpp"

using namespace sparsekit;

struct sk_matrix {
  SensingMatrix m;
};
struct sk_result {
  RecoveryResult r;
};
struct sk_trial {
  TrialRecord rec;
  TrialSpec spec;
};
struct sk_curve {
  std::vector<CurvePoint> points;
};
struct sk_phase {
  PhaseGrid grid;
};
struct sk_online {
  OnlineExperimentResult result;
  std::uint64_t seed;
};
struct sk_frame {
  Frame f;
};
struct sk_gabor {
  GaborDemoResult r;
};

namespace {

thread_local std::string last_error;

sk_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return SK_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return SK_DIMENSION_MISMATCH;
    case ErrorCode::Singular: return SK_SINGULAR;
    case ErrorCode::Degenerate: return SK_DEGENERATE;
    case ErrorCode::GuardExceeded: return SK_GUARD_EXCEEDED;
    case ErrorCode::Io: return SK_IO;
    case ErrorCode::Parse: return SK_PARSE;
  }
  return SK_INTERNAL;
}

template <typename Fn>
sk_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return SK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return SK_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

std::string text(const char* s, const char* fallback) { return s ? s : fallback; }

void add_meta(CsvTable& t, const char* meta) {
  if (!meta) return;
  std::istringstream in(meta);
  std::string line;
  std::vector<std::pair<std::string, std::string>> extra;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      extra.emplace_back(line, "");
    else
      extra.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  t.meta.insert(t.meta.begin(), extra.begin(), extra.end());
}

std::vector<std::string> meta_lines(const char* meta) {
  std::vector<std::string> out;
  if (!meta) return out;
  std::istringstream in(meta);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

Ensemble ensemble_of(const char* name) {
  const auto e = parse_ensemble(text(name, "gaussian"));
  if (!e) fail(ErrorCode::InvalidArgument, "unknown matrix ensemble '" + text(name, "") + "'");
  return *e;
}

SolverSpec solver_of(const sk_solver_opts& o) {
  SolverSpec s;
  const auto a = parse_algorithm(text(o.algorithm, "omp"));
  if (!a) fail(ErrorCode::InvalidArgument, "unknown algorithm '" + text(o.algorithm, "") + "'");
  s.algorithm = *a;
  s.config.lambda = o.lambda;
  s.config.step_mu = o.step_mu;
  if (o.sparsity_k) s.config.sparsity_k = o.sparsity_k;
  if (o.csmp_t) s.config.csmp_t = o.csmp_t;
  s.config.max_iters = o.max_iters;
  s.config.tol = o.tol;
  s.config.reweight_epsilon = o.reweight_epsilon;
  s.config.reweight_rounds = o.reweight_rounds;
  s.config.adaptive_step = o.adaptive_step != 0;
  s.lambda_scale = o.lambda_scale;
  s.step_scale = o.step_scale;
  s.debias = o.debias != 0;
  s.omp_k_steps = o.omp_k_steps != 0;
  return s;
}

TrialSpec trial_of(const sk_trial_opts& o) {
  TrialSpec t;
  t.matrix_ensemble = ensemble_of(o.matrix_ensemble);
  t.normalize = o.normalize != 0;
  const auto v = parse_value_distribution(text(o.values, "gaussian"));
  if (!v) fail(ErrorCode::InvalidArgument, "unknown value distribution '" + text(o.values, "") + "'");
  const auto r = parse_support_rule(text(o.support_rule, "exact"));
  if (!r) fail(ErrorCode::InvalidArgument, "unknown support rule '" + text(o.support_rule, "") + "'");
  t.vector = {*v, o.k, *r};
  t.n = o.n;
  t.l = o.l;
  t.noise_sigma = o.noise_sigma;
  t.success_tol = o.success_tol;
  t.seed = o.seed;
  t.solver = solver_of(o.solver);
  return t;
}

OnlineAlgorithm online_algo_of(const char* name) {
  const auto a = parse_online_algorithm(text(name, ""));
  if (!a) fail(ErrorCode::InvalidArgument, "unknown online algorithm '" + text(name, "") + "'");
  return *a;
}

SearchGuard guard_of(size_t max_cols, size_t max_subsets) {
  SearchGuard g;
  if (max_cols) g.max_cols = max_cols;
  if (max_subsets) g.max_subsets = max_subsets;
  return g;
}

template <typename T>
void copy_out(const T& v, double* out, size_t len) {
  need(out, "output buffer");
  if (static_cast<size_t>(v.size()) != len)
    fail(ErrorCode::DimensionMismatch, "output buffer has " + std::to_string(len) +
                                           " entries, need " + std::to_string(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v(i);
}

Matrix row_major(size_t rows, size_t cols, const double* data) {
  need(data, "data");
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = data[i * cols + j];
  return m;
}

Vector vector_of(const double* data, size_t len) {
  need(data, "vector");
  return Eigen::Map<const Vector>(data, static_cast<Eigen::Index>(len));
}

}  // namespace

extern "C" {

const char* sk_version(void) { return "0.1.0"; }
const char* sk_last_error(void) { return last_error.c_str(); }

const char* sk_status_string(sk_status s) {
  switch (s) {
    case SK_OK: return "ok";
    case SK_INVALID_ARGUMENT: return "invalid argument";
    case SK_DIMENSION_MISMATCH: return "dimension mismatch";
    case SK_SINGULAR: return "singular";
    case SK_DEGENERATE: return "degenerate";
    case SK_GUARD_EXCEEDED: return "search guard exceeded";
    case SK_IO: return "i/o error";
    case SK_PARSE: return "parse error";
    case SK_INTERNAL: return "internal error";
  }
  return "unknown status";
}

sk_status sk_matrix_generate(const char* ensemble, size_t rows, size_t cols, uint64_t seed,
                             int normalize, sk_matrix** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sk_matrix{
        SensingMatrix::generate(ensemble_of(ensemble), rows, cols, seed, normalize != 0)};
  });
}

sk_status sk_matrix_from_data(size_t rows, size_t cols, const double* data, int normalize,
                              sk_matrix** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sk_matrix{SensingMatrix::from_entries(row_major(rows, cols, data), normalize != 0)};
  });
}

sk_status sk_matrix_read_csv(const char* path, sk_matrix** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new sk_matrix{SensingMatrix::from_entries(read_matrix_csv(path))};
  });
}

sk_status sk_matrix_write_csv(const sk_matrix* m, const char* path, const char* meta) {
  return guarded([&] {
    need(m, "matrix");
    need(path, "path");
    CsvTable t = matrix_table(m->m);
    add_meta(t, meta);
    write_csv(path, t);
  });
}

size_t sk_matrix_rows(const sk_matrix* m) { return m ? m->m.rows() : 0; }
size_t sk_matrix_cols(const sk_matrix* m) { return m ? m->m.cols() : 0; }

sk_status sk_matrix_copy(const sk_matrix* m, double* out, size_t len) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "output buffer");
    const Matrix& e = m->m.entries();
    require(len == static_cast<size_t>(e.size()), ErrorCode::DimensionMismatch,
            "output buffer must hold rows * cols entries");
    for (Eigen::Index i = 0; i < e.rows(); ++i)
      for (Eigen::Index j = 0; j < e.cols(); ++j) out[i * e.cols() + j] = e(i, j);
  });
}

void sk_matrix_free(sk_matrix* m) { delete m; }

sk_status sk_matrix_coherence(const sk_matrix* m, double* out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    *out = mutual_coherence(m->m.entries());
  });
}

sk_status sk_welch_bound(size_t rows, size_t cols, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = welch_bound(rows, cols);
  });
}

sk_status sk_matrix_spark(const sk_matrix* m, size_t max_cols, size_t max_subsets, size_t* out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    *out = spark(m->m.entries(), guard_of(max_cols, max_subsets));
  });
}

sk_status sk_matrix_rip(const sk_matrix* m, size_t k, size_t max_cols, size_t max_subsets,
                        double* out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "out");
    *out = rip_constant(m->m.entries(), k, guard_of(max_cols, max_subsets));
  });
}

sk_status sk_threshold(const char* rule_name, double param, const double* in, double* out,
                       size_t len) {
  return guarded([&] {
    need(rule_name, "rule");
    const std::string r = rule_name;
    ThresholdRule tr = rule::Soft{param};
    if (r == "soft")
      tr = rule::Soft{param};
    else if (r == "hard")
      tr = rule::HardLevel{param};
    else if (r == "topk")
      tr = rule::TopK{static_cast<std::size_t>(param)};
    else if (r == "scad")
      tr = rule::Scad{param};
    else if (r == "garrote")
      tr = rule::Garrote{param};
    else
      fail(ErrorCode::InvalidArgument, "unknown threshold rule '" + r + "'");
    copy_out(apply_threshold(tr, vector_of(in, len)), out, len);
  });
}

sk_status sk_project_weighted_l1_ball(const double* weights, double radius, const double* in,
                                      double* out, size_t len) {
  return guarded([&] {
    const WeightedL1Ball ball{vector_of(weights, len), radius};
    copy_out(project_weighted_l1_ball(ball, vector_of(in, len)), out, len);
  });
}

void sk_solver_opts_default(sk_solver_opts* o) {
  if (!o) return;
  const BatchConfig c;
  *o = sk_solver_opts{};
  o->algorithm = "omp";
  o->lambda = c.lambda;
  o->step_mu = c.step_mu;
  o->max_iters = c.max_iters;
  o->tol = c.tol;
  o->reweight_epsilon = c.reweight_epsilon;
  o->reweight_rounds = c.reweight_rounds;
  o->omp_k_steps = 1;
}

sk_status sk_solve(const sk_matrix* x, const double* y, size_t len, const sk_solver_opts* opts,
                   sk_result** out) {
  return guarded([&] {
    need(x, "matrix");
    need(opts, "options");
    need(out, "out");
    RegressionProblem p(x->m, vector_of(y, len));
    const SolverSpec s = solver_of(*opts);
    const std::size_t k = s.config.sparsity_k.value_or(0);
    if (is_greedy(s.algorithm) && k == 0)
      fail(ErrorCode::InvalidArgument, "greedy solvers need sparsity_k");
    *out = new sk_result{run_solver(s, p, k)};
  });
}

size_t sk_result_length(const sk_result* r) { return r ? r->r.estimate.size() : 0; }

sk_status sk_result_estimate(const sk_result* r, double* out, size_t len) {
  return guarded([&] {
    need(r, "result");
    copy_out(r->r.estimate, out, len);
  });
}

size_t sk_result_iterations(const sk_result* r) { return r ? r->r.iterations : 0; }
double sk_result_residual(const sk_result* r) { return r ? r->r.residual_norm : 0.0; }
int sk_result_converged(const sk_result* r) { return r && r->r.converged ? 1 : 0; }
void sk_result_free(sk_result* r) { delete r; }

void sk_trial_opts_default(sk_trial_opts* o) {
  if (!o) return;
  const TrialSpec t;
  *o = sk_trial_opts{};
  o->matrix_ensemble = "gaussian";
  o->normalize = 1;
  o->values = "gaussian";
  o->support_rule = "exact";
  o->n = t.n;
  o->l = t.l;
  o->k = 5;
  o->noise_sigma = 0.0;
  o->success_tol = t.success_tol;
  o->seed = 0;
  sk_solver_opts_default(&o->solver);
}

sk_status sk_trial_run(const sk_trial_opts* opts, sk_trial** out) {
  return guarded([&] {
    need(opts, "options");
    need(out, "out");
    const TrialSpec spec = trial_of(*opts);
    *out = new sk_trial{run_trial(spec), spec};
  });
}

int sk_trial_success(const sk_trial* t) { return t && t->rec.success ? 1 : 0; }
double sk_trial_relative_error(const sk_trial* t) { return t ? t->rec.relative_error : 0.0; }
size_t sk_trial_iterations(const sk_trial* t) { return t ? t->rec.iterations : 0; }

size_t sk_trial_summary(const sk_trial* t, char* buf, size_t cap) {
  if (!t) return 0;
  const TrialRecord& r = t->rec;
  std::ostringstream s;
  s << "{\"algo\": \"" << to_string(t->spec.solver.algorithm) << "\", \"seed\": " << t->spec.seed
    << ", \"n\": " << t->spec.n << ", \"l\": " << t->spec.l
    << ", \"k\": " << t->spec.vector.sparsity_k << ", \"iterations\": " << r.iterations
    << ", \"residual\": " << format_double(r.residual_norm)
    << ", \"relative_error\": " << format_double(r.relative_error)
    << ", \"support_match\": " << (r.support_match ? "true" : "false")
    << ", \"converged\": " << (r.converged ? "true" : "false")
    << ", \"success\": " << (r.success ? "true" : "false");
  if (!r.failure.empty()) {
    std::string esc;
    for (char c : r.failure) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    s << ", \"failure\": \"" << esc << "\"";
  }
  s << "}";
  const std::string line = s.str();
  if (buf && cap) {
    const size_t n = std::min(cap - 1, line.size());
    std::memcpy(buf, line.data(), n);
    buf[n] = '\0';
  }
  return line.size();
}

sk_status sk_trial_write_csv(const sk_trial* t, const char* path, const char* meta) {
  return guarded([&] {
    need(t, "trial");
    need(path, "path");
    CsvTable tab;
    add_meta(tab, meta);
    tab.columns = {"index", "truth", "estimate"};
    for (Eigen::Index i = 0; i < t->rec.truth.size(); ++i)
      tab.rows.push_back({std::to_string(i), format_double(t->rec.truth(i)),
                          format_double(t->rec.estimate(i))});
    write_csv(path, tab);
  });
}

void sk_trial_free(sk_trial* t) { delete t; }

sk_status sk_curve_run(const sk_trial_opts* base, size_t trials, size_t k_min, size_t k_max,
                       size_t workers, sk_curve** out) {
  return guarded([&] {
    need(base, "options");
    need(out, "out");
    CurveSpec spec;
    spec.base = trial_of(*base);
    spec.trials = trials;
    spec.k_min = k_min;
    spec.k_max = k_max;
    *out = new sk_curve{recovery_curve(spec, workers)};
  });
}

size_t sk_curve_size(const sk_curve* c) { return c ? c->points.size() : 0; }

sk_status sk_curve_point(const sk_curve* c, size_t i, size_t* k, size_t* successes,
                         size_t* trials) {
  return guarded([&] {
    need(c, "curve");
    require(i < c->points.size(), ErrorCode::InvalidArgument, "curve index out of range");
    const CurvePoint& p = c->points[i];
    if (k) *k = p.k;
    if (successes) *successes = p.successes;
    if (trials) *trials = p.trials;
  });
}

sk_status sk_curve_write_csv(const sk_curve* c, const char* path, const char* meta) {
  return guarded([&] {
    need(c, "curve");
    need(path, "path");
    CsvTable t = curve_table(c->points);
    add_meta(t, meta);
    write_csv(path, t);
  });
}

void sk_curve_free(sk_curve* c) { delete c; }

sk_status sk_phase_run(const sk_trial_opts* base, size_t grid, size_t trials, size_t workers,
                       sk_phase** out) {
  return guarded([&] {
    need(base, "options");
    need(out, "out");
    PhaseSpec spec;
    spec.base = trial_of(*base);
    spec.l = base->l;
    spec.grid = grid;
    spec.trials = trials;
    *out = new sk_phase{phase_grid(spec, workers)};
  });
}

size_t sk_phase_grid(const sk_phase* p) { return p ? p->grid.grid : 0; }

sk_status sk_phase_cell(const sk_phase* p, size_t row, size_t col, double* alpha, double* beta,
                        size_t* successes, size_t* trials) {
  return guarded([&] {
    need(p, "phase grid");
    require(row < p->grid.grid && col < p->grid.grid, ErrorCode::InvalidArgument,
            "cell index out of range");
    const PhaseCell& c = p->grid.at(row, col);
    if (alpha) *alpha = c.alpha;
    if (beta) *beta = c.beta;
    if (successes) *successes = c.successes;
    if (trials) *trials = c.trials;
  });
}

sk_status sk_phase_write_csv(const sk_phase* p, const char* path, const char* meta) {
  return guarded([&] {
    need(p, "phase grid");
    need(path, "path");
    CsvTable t = phase_table(p->grid);
    add_meta(t, meta);
    write_csv(path, t);
  });
}

sk_status sk_phase_write_pgm(const sk_phase* p, const char* path, const char* meta) {
  return guarded([&] {
    need(p, "phase grid");
    need(path, "path");
    write_pgm(path, p->grid.grid, p->grid.grid, phase_heatmap(p->grid), meta_lines(meta));
  });
}

sk_status sk_phase_write_timing(const sk_phase* p, const char* path) {
  return guarded([&] {
    need(p, "phase grid");
    need(path, "path");
    write_csv(path, phase_timing_table(p->grid));
  });
}

void sk_phase_free(sk_phase* p) { delete p; }

void sk_online_opts_default(sk_online_opts* o) {
  if (!o) return;
  const OnlineExperimentSpec d = default_online_experiment();
  *o = sk_online_opts{};
  o->length = d.scenario.length;
  o->sparsity = d.scenario.sparsity;
  o->samples = d.scenario.samples;
  o->change_at = d.scenario.change_at;
  o->changed_coefficients = d.scenario.changed_coefficients;
  o->noise_variance = d.scenario.noise_variance;
  o->haar = d.scenario.haar ? 1 : 0;
  o->seed = d.scenario.seed;
  o->adcosamp_k = d.adcosamp.sparsity_k;
  o->lms_mu = d.adcosamp.lms_mu;
  o->normalized_lms = d.adcosamp.normalized_lms ? 1 : 0;
  o->forgetting_beta = d.adcosamp.forgetting_beta;
  o->spapsm_k = d.spapsm.sparsity_k;
  o->q_slabs = d.spapsm.q_slabs;
  o->slab_epsilon = d.spapsm.slab_epsilon;
  o->extrapolation_scale = d.spapsm.extrapolation_scale;
  o->weight_epsilon = d.spapsm.weight_epsilon;
  o->ball_radius = d.spapsm.ball_radius;
  o->use_weights = d.spapsm.use_weights ? 1 : 0;
  o->runs = d.runs;
  o->workers = 0;
}

sk_status sk_online_run(const sk_online_opts* o, sk_online** out) {
  return guarded([&] {
    need(o, "options");
    need(out, "out");
    OnlineExperimentSpec spec = default_online_experiment();
    spec.scenario = {o->length,       o->sparsity,  o->samples,  o->change_at,
                     o->changed_coefficients, o->noise_variance, o->haar != 0, o->seed};
    spec.adcosamp.sparsity_k = o->adcosamp_k;
    spec.adcosamp.lms_mu = o->lms_mu;
    spec.adcosamp.normalized_lms = o->normalized_lms != 0;
    spec.adcosamp.forgetting_beta = o->forgetting_beta;
    spec.spapsm.sparsity_k = o->spapsm_k;
    spec.spapsm.q_slabs = o->q_slabs;
    spec.spapsm.slab_epsilon = o->slab_epsilon;
    spec.spapsm.extrapolation_scale = o->extrapolation_scale;
    spec.spapsm.weight_epsilon = o->weight_epsilon;
    spec.spapsm.ball_radius = o->ball_radius;
    spec.spapsm.use_weights = o->use_weights != 0;
    spec.runs = o->runs;
    *out = new sk_online{online_experiment(spec, o->workers), o->seed};
  });
}

size_t sk_online_length(const sk_online* o) { return o ? o->result.adcosamp_log10.size() : 0; }

namespace {
const std::vector<double>& trace_of(const sk_online* o, OnlineAlgorithm a) {
  return a == OnlineAlgorithm::AdCoSaMP ? o->result.adcosamp_log10 : o->result.spapsm_log10;
}
}  // namespace

sk_status sk_online_trace(const sk_online* o, const char* algo, double* out, size_t len) {
  return guarded([&] {
    need(o, "online result");
    const auto& v = trace_of(o, online_algo_of(algo));
    copy_out(Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size())), out, len);
  });
}

sk_status sk_online_summary(const sk_online* o, const char* algo, sk_trace_summary* out) {
  return guarded([&] {
    need(o, "online result");
    need(out, "out");
    const TraceSummary& s = online_algo_of(algo) == OnlineAlgorithm::AdCoSaMP
                                ? o->result.adcosamp_summary
                                : o->result.spapsm_summary;
    out->start_db = s.start_db;
    out->pre_change_db = s.pre_change_db;
    out->spike_db = s.spike_db;
    out->steady_state_db = s.steady_state_db;
    out->reconverge_samples =
        s.reconverge_samples ? static_cast<long>(*s.reconverge_samples) : -1L;
  });
}

sk_status sk_online_write_csv(const sk_online* o, const char* algo, const char* path,
                              const char* meta) {
  return guarded([&] {
    need(o, "online result");
    need(path, "path");
    const OnlineAlgorithm a = online_algo_of(algo);
    CsvTable t = trace_table(trace_of(o, a), a, o->seed);
    add_meta(t, meta);
    write_csv(path, t);
  });
}

void sk_online_free(sk_online* o) { delete o; }

sk_status sk_frame_from_atoms(size_t dim, size_t count, const double* atoms, sk_frame** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sk_frame{Frame(row_major(dim, count, atoms))};
  });
}

sk_status sk_frame_gabor(size_t length, double sigma, size_t time_step, size_t freq_step,
                         sk_frame** out) {
  return guarded([&] {
    need(out, "out");
    *out = new sk_frame{gabor_dictionary({length, sigma, time_step, freq_step})};
  });
}

size_t sk_frame_dim(const sk_frame* f) { return f ? f->f.dimension() : 0; }
size_t sk_frame_size(const sk_frame* f) { return f ? f->f.size() : 0; }

sk_status sk_frame_bounds(const sk_frame* f, double* lower, double* upper, int* tight) {
  return guarded([&] {
    need(f, "frame");
    if (lower) *lower = f->f.lower_bound();
    if (upper) *upper = f->f.upper_bound();
    if (tight) *tight = f->f.tight() ? 1 : 0;
  });
}

sk_status sk_frame_dual(const sk_frame* f, double* out, size_t len) {
  return guarded([&] {
    need(f, "frame");
    need(out, "output buffer");
    const Matrix d = canonical_dual(f->f);
    require(len == static_cast<size_t>(d.size()), ErrorCode::DimensionMismatch,
            "output buffer must hold dim * count entries");
    for (Eigen::Index i = 0; i < d.rows(); ++i)
      for (Eigen::Index j = 0; j < d.cols(); ++j) out[i * d.cols() + j] = d(i, j);
  });
}

sk_status sk_frame_write_csv(const sk_frame* f, const char* path, const char* meta) {
  return guarded([&] {
    need(f, "frame");
    need(path, "path");
    CsvTable t = matrix_table(f->f.atoms());
    t.add_meta("lower_bound", format_double(f->f.lower_bound()));
    t.add_meta("upper_bound", format_double(f->f.upper_bound()));
    t.add_meta("tight", f->f.tight() ? "1" : "0");
    add_meta(t, meta);
    write_csv(path, t);
  });
}

void sk_frame_free(sk_frame* f) { delete f; }

void sk_gabor_opts_default(sk_gabor_opts* o) {
  if (!o) return;
  const GaborDemoSpec d;
  *o = sk_gabor_opts{d.length, d.sigma, d.time_step, d.freq_step,
                     d.measurements, d.lambda_scale, d.max_iters, d.seed};
}

sk_status sk_gabor_demo(const sk_gabor_opts* o, sk_gabor** out) {
  return guarded([&] {
    need(o, "options");
    need(out, "out");
    const GaborDemoSpec spec{o->length,       o->sigma,        o->time_step, o->freq_step,
                             o->measurements, o->lambda_scale, o->max_iters, o->seed};
    *out = new sk_gabor{gabor_demo(spec)};
  });
}

double sk_gabor_relative_error(const sk_gabor* g) { return g ? g->r.relative_error : 0.0; }
size_t sk_gabor_atoms(const sk_gabor* g) { return g ? g->r.atoms : 0; }

sk_status sk_gabor_write(const sk_gabor* g, const char* prefix, const char* meta) {
  return guarded([&] {
    need(g, "gabor result");
    need(prefix, "prefix");
    const std::string p = prefix;
    const auto comments = meta_lines(meta);
    const auto& so = g->r.spectrogram_original;
    const auto& sr = g->r.spectrogram_recovered;
    const auto h = static_cast<std::size_t>(so.rows() / 2 + 1);
    const auto w = static_cast<std::size_t>(so.cols());
    write_pgm(p + "_original.pgm", w, h, spectrogram_pixels(so), comments);
    write_pgm(p + "_recovered.pgm", w, h, spectrogram_pixels(sr), comments);
    CsvTable t = decay_table(g->r);
    t.add_meta("relative_error", format_double(g->r.relative_error));
    t.add_meta("atoms", std::to_string(g->r.atoms));
    add_meta(t, meta);
    write_csv(p + "_decay.csv", t);
  });
}

void sk_gabor_free(sk_gabor* g) { delete g; }

}  // extern "C"
