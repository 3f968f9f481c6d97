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

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_GT(std::strlen(sk_version()), 0u);
  EXPECT_STREQ(sk_status_string(SK_OK), "ok");
  EXPECT_STRNE(sk_status_string(SK_SINGULAR), sk_status_string(SK_PARSE));
}

TEST(CApi, MatrixLifecycleAndCsvRoundTrip) {
  sk_matrix* m = nullptr;
  ASSERT_EQ(sk_matrix_generate("gaussian", 4, 8, 3, 1, &m), SK_OK);
  EXPECT_EQ(sk_matrix_rows(m), 4u);
  EXPECT_EQ(sk_matrix_cols(m), 8u);
  std::vector<double> a(32), b(32);
  ASSERT_EQ(sk_matrix_copy(m, a.data(), a.size()), SK_OK);
  ASSERT_EQ(sk_matrix_write_csv(m, "capi_matrix.csv", "origin=test"), SK_OK);
  EXPECT_NE(slurp("capi_matrix.csv").find("# origin=test"), std::string::npos);
  sk_matrix* back = nullptr;
  ASSERT_EQ(sk_matrix_read_csv("capi_matrix.csv", &back), SK_OK);
  ASSERT_EQ(sk_matrix_copy(back, b.data(), b.size()), SK_OK);
  EXPECT_EQ(a, b);
  EXPECT_EQ(sk_matrix_copy(m, a.data(), 31), SK_DIMENSION_MISMATCH);
  sk_matrix_free(back);
  sk_matrix_free(m);
  sk_matrix_free(nullptr);
}

TEST(CApi, ErrorsCarryMessages) {
  sk_matrix* m = nullptr;
  EXPECT_EQ(sk_matrix_generate("nope", 4, 8, 3, 1, &m), SK_INVALID_ARGUMENT);
  EXPECT_EQ(m, nullptr);
  EXPECT_GT(std::strlen(sk_last_error()), 0u);
  EXPECT_EQ(sk_matrix_generate("partial-orthonormal", 9, 8, 3, 0, &m), SK_INVALID_ARGUMENT);
  EXPECT_EQ(sk_matrix_read_csv("/nonexistent/x.csv", &m), SK_IO);
  EXPECT_EQ(sk_matrix_generate("gaussian", 4, 8, 3, 1, nullptr), SK_INVALID_ARGUMENT);
}

TEST(CApi, Diagnostics) {
  const double data[] = {1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0};
  sk_matrix* m = nullptr;
  ASSERT_EQ(sk_matrix_from_data(4, 6, data, 0, &m), SK_OK);
  size_t spark = 0;
  ASSERT_EQ(sk_matrix_spark(m, 0, 0, &spark), SK_OK);
  EXPECT_EQ(spark, 3u);
  double mu = 0, welch = 0, rip = 0;
  ASSERT_EQ(sk_matrix_coherence(m, &mu), SK_OK);
  EXPECT_NEAR(mu, 1 / std::sqrt(2.0), 1e-12);
  ASSERT_EQ(sk_welch_bound(4, 8, &welch), SK_OK);
  EXPECT_NEAR(welch, 0.37796447, 1e-8);
  ASSERT_EQ(sk_matrix_rip(m, 1, 0, 0, &rip), SK_OK);
  EXPECT_NEAR(rip, 1.0, 1e-12);  // unnormalized columns of norm sqrt(2)
  EXPECT_EQ(sk_welch_bound(4, 4, &welch), SK_INVALID_ARGUMENT);
  sk_matrix_free(m);
}

TEST(CApi, ThresholdsAndBall) {
  const double v[] = {0.2, -0.7, 0.8, -0.1, 1.0};
  double out[5];
  ASSERT_EQ(sk_threshold("soft", 0.5, v, out, 5), SK_OK);
  EXPECT_NEAR(out[1], -0.2, 1e-12);
  EXPECT_NEAR(out[4], 0.5, 1e-12);
  ASSERT_EQ(sk_threshold("hard", 0.5, v, out, 5), SK_OK);
  EXPECT_EQ(out[0], 0.0);
  EXPECT_EQ(out[2], 0.8);
  ASSERT_EQ(sk_threshold("topk", 2, v, out, 5), SK_OK);
  EXPECT_EQ(out[1], 0.0);
  EXPECT_EQ(out[2], 0.8);
  EXPECT_EQ(out[4], 1.0);
  EXPECT_EQ(sk_threshold("lars", 1, v, out, 5), SK_INVALID_ARGUMENT);
  const double w[] = {1, 1};
  const double t[] = {1, 1};
  double p[2];
  ASSERT_EQ(sk_project_weighted_l1_ball(w, 1.0, t, p, 2), SK_OK);
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
  EXPECT_EQ(sk_project_weighted_l1_ball(w, -1.0, t, p, 2), SK_INVALID_ARGUMENT);
}

TEST(CApi, SolveOmp) {
  sk_matrix* m = nullptr;
  ASSERT_EQ(sk_matrix_generate("gaussian", 10, 20, 5, 1, &m), SK_OK);
  std::vector<double> x(200);
  sk_matrix_copy(m, x.data(), x.size());
  std::vector<double> y(10);
  for (int i = 0; i < 10; ++i) y[i] = 2.0 * x[i * 20 + 3] - x[i * 20 + 11];
  sk_solver_opts o;
  sk_solver_opts_default(&o);
  o.algorithm = "omp";
  EXPECT_EQ(sk_solve(m, y.data(), y.size(), &o, nullptr), SK_INVALID_ARGUMENT);
  o.sparsity_k = 2;
  sk_result* r = nullptr;
  ASSERT_EQ(sk_solve(m, y.data(), y.size(), &o, &r), SK_OK) << sk_last_error();
  ASSERT_EQ(sk_result_length(r), 20u);
  std::vector<double> est(20);
  ASSERT_EQ(sk_result_estimate(r, est.data(), est.size()), SK_OK);
  EXPECT_NEAR(est[3], 2.0, 1e-10);
  EXPECT_NEAR(est[11], -1.0, 1e-10);
  EXPECT_EQ(sk_result_iterations(r), 2u);
  EXPECT_LE(sk_result_residual(r), 1e-10);
  EXPECT_EQ(sk_solve(m, y.data(), 9, &o, &r), SK_DIMENSION_MISMATCH);
  sk_result_free(r);
  o.algorithm = "bogus";
  EXPECT_EQ(sk_solve(m, y.data(), y.size(), &o, &r), SK_INVALID_ARGUMENT);
  sk_matrix_free(m);
}

TEST(CApi, TrialSummaryAndCsv) {
  sk_trial_opts o;
  sk_trial_opts_default(&o);
  o.solver.algorithm = "cosamp";
  o.n = 20;
  o.l = 50;
  o.k = 5;
  o.seed = 42;
  sk_trial* t = nullptr;
  ASSERT_EQ(sk_trial_run(&o, &t), SK_OK) << sk_last_error();
  EXPECT_EQ(sk_trial_success(t), 1);
  EXPECT_LE(sk_trial_relative_error(t), 1e-6);
  const size_t need = sk_trial_summary(t, nullptr, 0);
  std::string buf(need + 1, '\0');
  sk_trial_summary(t, buf.data(), buf.size());
  buf.resize(need);
  EXPECT_EQ(buf.front(), '{');
  EXPECT_NE(buf.find("\"algo\": \"cosamp\""), std::string::npos) << buf;
  EXPECT_NE(buf.find("\"seed\": 42"), std::string::npos) << buf;
  ASSERT_EQ(sk_trial_write_csv(t, "capi_trial.csv", nullptr), SK_OK);
  EXPECT_NE(slurp("capi_trial.csv").find("index,truth,estimate"), std::string::npos);
  sk_trial_free(t);
}

TEST(CApi, CurveAndPhase) {
  sk_trial_opts o;
  sk_trial_opts_default(&o);
  o.solver.algorithm = "omp";
  o.n = 10;
  o.l = 20;
  sk_curve* c = nullptr;
  ASSERT_EQ(sk_curve_run(&o, 5, 1, 4, 1, &c), SK_OK) << sk_last_error();
  ASSERT_EQ(sk_curve_size(c), 4u);
  size_t k = 0, m = 0, total = 0;
  ASSERT_EQ(sk_curve_point(c, 0, &k, &m, &total), SK_OK);
  EXPECT_EQ(k, 1u);
  EXPECT_EQ(total, 5u);
  EXPECT_EQ(sk_curve_point(c, 4, &k, &m, &total), SK_INVALID_ARGUMENT);
  sk_curve_free(c);

  sk_phase* p = nullptr;
  ASSERT_EQ(sk_phase_run(&o, 4, 3, 2, &p), SK_OK) << sk_last_error();
  EXPECT_EQ(sk_phase_grid(p), 4u);
  double alpha = 0, beta = 0;
  ASSERT_EQ(sk_phase_cell(p, 3, 0, &alpha, &beta, &m, &total), SK_OK);
  EXPECT_EQ(alpha, 1.0);
  EXPECT_EQ(beta, 0.25);
  EXPECT_LE(m, total);
  ASSERT_EQ(sk_phase_write_csv(p, "capi_phase.csv", "seed=0"), SK_OK);
  ASSERT_EQ(sk_phase_write_pgm(p, "capi_phase.pgm", "seed=0"), SK_OK);
  EXPECT_EQ(slurp("capi_phase.pgm").rfind("P5", 0), 0u);
  sk_phase_free(p);
}

TEST(CApi, OnlineSmall) {
  sk_online_opts o;
  sk_online_opts_default(&o);
  o.length = 64;
  o.sparsity = 5;
  o.samples = 200;
  o.change_at = 100;
  o.adcosamp_k = o.spapsm_k = 8;
  o.q_slabs = 8;
  o.runs = 2;
  sk_online* r = nullptr;
  ASSERT_EQ(sk_online_run(&o, &r), SK_OK) << sk_last_error();
  ASSERT_EQ(sk_online_length(r), 200u);
  std::vector<double> trace(200);
  ASSERT_EQ(sk_online_trace(r, "spapsm", trace.data(), trace.size()), SK_OK);
  EXPECT_TRUE(std::isfinite(trace.back()));
  sk_trace_summary s;
  ASSERT_EQ(sk_online_summary(r, "adcosamp", &s), SK_OK);
  EXPECT_TRUE(std::isfinite(s.start_db));
  EXPECT_EQ(sk_online_trace(r, "lms", trace.data(), trace.size()), SK_INVALID_ARGUMENT);
  ASSERT_EQ(sk_online_write_csv(r, "adcosamp", "capi_online.csv", nullptr), SK_OK);
  EXPECT_NE(slurp("capi_online.csv").find("n,mse_db,algo,seed"), std::string::npos);
  sk_online_free(r);
}

TEST(CApi, Frames) {
  const double mb[] = {0, -1 / std::sqrt(2.0), 1 / std::sqrt(2.0),
                       std::sqrt(2.0 / 3), -1 / std::sqrt(6.0), -1 / std::sqrt(6.0)};
  sk_frame* f = nullptr;
  ASSERT_EQ(sk_frame_from_atoms(2, 3, mb, &f), SK_OK);
  double a = 0, b = 0;
  int tight = 0;
  ASSERT_EQ(sk_frame_bounds(f, &a, &b, &tight), SK_OK);
  EXPECT_NEAR(a, 1.0, 1e-10);
  EXPECT_NEAR(b, 1.0, 1e-10);
  EXPECT_EQ(tight, 1);
  double dual[6];
  ASSERT_EQ(sk_frame_dual(f, dual, 6), SK_OK);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(dual[i], mb[i], 1e-10);
  sk_frame_free(f);

  ASSERT_EQ(sk_frame_gabor(32, 2.0, 8, 2, &f), SK_OK);
  EXPECT_EQ(sk_frame_dim(f), 32u);
  ASSERT_EQ(sk_frame_bounds(f, &a, &b, &tight), SK_OK);
  EXPECT_GT(a, 0.0);
  sk_frame_free(f);
  EXPECT_EQ(sk_frame_gabor(32, 2.0, 5, 2, &f), SK_INVALID_ARGUMENT);
  const double zeros[] = {0, 0, 0, 0};
  EXPECT_EQ(sk_frame_from_atoms(2, 2, zeros, &f), SK_DEGENERATE);
}

TEST(CApi, GaborDemoSmall) {
  sk_gabor_opts o;
  sk_gabor_opts_default(&o);
  o.length = 64;
  o.time_step = 8;
  o.freq_step = 4;
  o.measurements = 24;
  sk_gabor* g = nullptr;
  ASSERT_EQ(sk_gabor_demo(&o, &g), SK_OK) << sk_last_error();
  EXPECT_GT(sk_gabor_atoms(g), 0u);
  EXPECT_TRUE(std::isfinite(sk_gabor_relative_error(g)));
  ASSERT_EQ(sk_gabor_write(g, "capi_gabor", nullptr), SK_OK);
  EXPECT_EQ(slurp("capi_gabor_original.pgm").rfind("P5", 0), 0u);
  EXPECT_NE(slurp("capi_gabor_decay.csv").find("rank"), std::string::npos);
  sk_gabor_free(g);
}
