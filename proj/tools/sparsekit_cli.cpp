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

// Command-line front end over the C interface.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparsekit/sparsekit.h"

namespace {

constexpr int kUsageError = 1;
constexpr int kRuntimeError = 2;

struct RuntimeFailure {
  std::string message;
};

void check(sk_status s, const char* what) {
  if (s != SK_OK)
    throw RuntimeFailure{std::string(what) + ": " + sk_status_string(s) + ": " + sk_last_error()};
}

const CLI::IsMember kEnsembles({"gaussian", "bernoulli", "ternary", "sphere",
                                "partial-orthonormal", "fourier", "partial-fourier"});

// Backing storage for the string fields of sk_trial_opts.
struct TrialArgs {
  std::string algo = "omp";
  std::string ensemble = "gaussian";
  std::string values = "gaussian";
  std::string support = "exact";
  bool no_normalize = false;
  sk_trial_opts opts{};

  TrialArgs() { sk_trial_opts_default(&opts); }

  const sk_trial_opts& finish() {
    opts.solver.algorithm = algo.c_str();
    opts.matrix_ensemble = ensemble.c_str();
    opts.values = values.c_str();
    opts.support_rule = support.c_str();
    opts.normalize = no_normalize ? 0 : 1;
    return opts;
  }
};

void add_trial_options(CLI::App* app, TrialArgs& a, bool with_shape) {
  sk_solver_opts& s = a.opts.solver;
  app->add_option("--algo", a.algo, "omp, cosamp, sp, ista, fista, iht, cd, tst, reweighted")
      ->check(CLI::IsMember({"omp", "cosamp", "sp", "ista", "ist", "fista", "iht", "cd", "tst",
                             "csmp", "reweighted"}))
      ->capture_default_str();
  app->add_option("--ensemble", a.ensemble,
                  "gaussian, bernoulli, ternary, sphere, partial-orthonormal")
      ->check(kEnsembles)
      ->capture_default_str();
  app->add_flag("--no-normalize", a.no_normalize, "keep raw column scaling");
  app->add_option("--values", a.values, "cars, gaussian, uniform, laplace, cauchy")
      ->check(CLI::IsMember({"cars", "gaussian", "uniform", "laplace", "double-exponential",
                             "cauchy"}))
      ->capture_default_str();
  app->add_option("--support", a.support, "exact or bernoulli")
      ->check(CLI::IsMember({"exact", "bernoulli"}))
      ->capture_default_str();
  if (with_shape) {
    app->add_option("--n", a.opts.n, "measurements N")->capture_default_str();
    app->add_option("--k", a.opts.k, "sparsity k")->capture_default_str();
  }
  app->add_option("--l", a.opts.l, "unknowns l")->capture_default_str();
  app->add_option("--noise", a.opts.noise_sigma, "noise standard deviation")
      ->capture_default_str();
  app->add_option("--success-tol", a.opts.success_tol, "relative l2 error counted as success")
      ->capture_default_str();
  app->add_option("--seed", a.opts.seed, "random seed")->capture_default_str();
  app->add_option("--lambda", s.lambda, "l1 weight")->capture_default_str();
  app->add_option("--lambda-scale", s.lambda_scale, "lambda as a fraction of ||X^T y||_inf")
      ->capture_default_str();
  app->add_option("--step", s.step_mu, "step size (0: automatic)")->capture_default_str();
  app->add_option("--step-scale", s.step_scale, "step as a fraction of 1/lambda_max(X^T X)")
      ->capture_default_str();
  app->add_option("--solver-k", s.sparsity_k, "sparsity given to the solver (0: true k)")
      ->capture_default_str();
  app->add_option("--t", s.csmp_t, "CSMP stage-1 count (0: default)")->capture_default_str();
  app->add_option("--max-iters", s.max_iters, "iteration cap")->capture_default_str();
  app->add_option("--tol", s.tol, "stopping tolerance")->capture_default_str();
  app->add_option("--reweight-epsilon", s.reweight_epsilon, "reweighting epsilon")
      ->capture_default_str();
  app->add_option("--reweight-rounds", s.reweight_rounds, "reweighting rounds")
      ->capture_default_str();
  app->add_option("--debias", s.debias, "least-squares refit on the support (0/1)")
      ->capture_default_str();
  app->add_option("--adaptive-step", s.adaptive_step, "IHT adaptive step (0/1)")
      ->capture_default_str();
  app->add_option("--omp-k-steps", s.omp_k_steps, "OMP stops after k selections (0/1)")
      ->capture_default_str();
}

// Header metadata: the command name followed by every option value.
std::string config_echo(const CLI::App* sub) {
  std::ostringstream meta;
  meta << "command=" << sub->get_name() << '\n';
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->get_name() == "--config") continue;
    std::string value;
    if (opt->get_expected_max() == 0) {
      value = opt->count() > 0 ? "1" : "0";
    } else if (opt->count() > 0) {
      const auto res = opt->results();
      for (std::size_t i = 0; i < res.size(); ++i) value += (i ? " " : "") + res[i];
    } else {
      value = opt->get_default_str();
    }
    std::string name = opt->get_name();
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    meta << name << '=' << value << '\n';
  }
  return meta.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparsekit: sparse recovery experiments"};
  app.require_subcommand(1);

  // solve
  TrialArgs solve_args;
  std::string solve_out = "solve.csv";
  auto* solve = app.add_subcommand("solve", "recover one generated problem");
  add_trial_options(solve, solve_args, true);
  solve->add_option("--out", solve_out, "coefficient CSV path")->capture_default_str();

  // curve
  TrialArgs curve_args;
  std::size_t curve_trials = 50, k_min = 1, k_max = 0, curve_workers = 0;
  std::string curve_out = "curve.csv";
  auto* curve = app.add_subcommand("curve", "probability of recovery against k at fixed N");
  add_trial_options(curve, curve_args, true);
  curve->add_option("--trials", curve_trials, "trials per point (M)")->capture_default_str();
  curve->add_option("--k-min", k_min, "smallest k")->capture_default_str();
  curve->add_option("--k-max", k_max, "largest k (0: N)")->capture_default_str();
  curve->add_option("--workers", curve_workers, "worker threads (0: automatic)")
      ->capture_default_str();
  curve->add_option("--out", curve_out, "CSV path")->capture_default_str();

  // phase
  TrialArgs phase_args;
  phase_args.opts.l = 100;
  std::size_t grid = 20, phase_trials = 25, phase_workers = 0;
  std::string phase_out = "phase", timing_out;
  auto* phase = app.add_subcommand("phase", "alpha-beta phase-transition grid");
  add_trial_options(phase, phase_args, false);
  phase->add_option("--grid", grid, "cells per axis")->capture_default_str();
  phase->add_option("--trials", phase_trials, "trials per cell (M)")->capture_default_str();
  phase->add_option("--workers", phase_workers, "worker threads (0: automatic)")
      ->capture_default_str();
  phase->add_option("--out", phase_out, "output prefix for .csv and .pgm")->capture_default_str();
  phase->add_option("--timing", timing_out, "optional CSV of median wall time per cell");

  // online
  sk_online_opts on{};
  sk_online_opts_default(&on);
  std::string online_out = "online";
  auto* online = app.add_subcommand("online", "time-varying sparse system identification");
  online->set_config("--config", "", "key=value scenario file");
  online->add_option("--length", on.length, "system length l")->capture_default_str();
  online->add_option("--sparsity", on.sparsity, "nonzero coefficients")->capture_default_str();
  online->add_option("--samples", on.samples, "stream length")->capture_default_str();
  online->add_option("--change-at", on.change_at, "change time (0: none)")->capture_default_str();
  online->add_option("--changed", on.changed_coefficients, "coefficients redrawn at the change")
      ->capture_default_str();
  online->add_option("--noise-variance", on.noise_variance, "noise variance")
      ->capture_default_str();
  online->add_option("--haar", on.haar, "Haar sparsifying transform (0/1)")->capture_default_str();
  online->add_option("--seed", on.seed, "random seed")->capture_default_str();
  online->add_option("--adcosamp-k", on.adcosamp_k, "AdCoSaMP sparsity")->capture_default_str();
  online->add_option("--lms-mu", on.lms_mu, "AdCoSaMP LMS step")->capture_default_str();
  online->add_option("--nlms", on.normalized_lms, "normalized LMS (0/1)")->capture_default_str();
  online->add_option("--beta", on.forgetting_beta, "forgetting factor")->capture_default_str();
  online->add_option("--spapsm-k", on.spapsm_k, "SpAPSM sparsity")->capture_default_str();
  online->add_option("--q", on.q_slabs, "slabs per step")->capture_default_str();
  online->add_option("--epsilon", on.slab_epsilon, "slab half-width")->capture_default_str();
  online->add_option("--mu-scale", on.extrapolation_scale, "mu_n / M_n")->capture_default_str();
  online->add_option("--weight-epsilon", on.weight_epsilon, "reweighting epsilon")
      ->capture_default_str();
  online->add_option("--radius", on.ball_radius, "weighted ball radius (0: k)")
      ->capture_default_str();
  online->add_option("--weights", on.use_weights, "weighted l1 ball (0/1)")->capture_default_str();
  online->add_option("--runs", on.runs, "realizations averaged per curve")->capture_default_str();
  online->add_option("--workers", on.workers, "worker threads (0: automatic)")
      ->capture_default_str();
  online->add_option("--out", online_out, "output prefix")->capture_default_str();

  // gabor-demo
  sk_gabor_opts gb{};
  sk_gabor_opts_default(&gb);
  std::string gabor_out = "gabor";
  auto* gabor = app.add_subcommand("gabor-demo", "compressed time-frequency analysis demo");
  gabor->add_option("--l", gb.length, "signal length")->capture_default_str();
  gabor->add_option("--sigma", gb.sigma, "window spread (0: l/16)")->capture_default_str();
  gabor->add_option("--alpha", gb.time_step, "time step")->capture_default_str();
  gabor->add_option("--beta", gb.freq_step, "frequency step")->capture_default_str();
  gabor->add_option("--n", gb.measurements, "measurements (0: l/8)")->capture_default_str();
  gabor->add_option("--lambda-scale", gb.lambda_scale, "lambda / ||A^T y||_inf")
      ->capture_default_str();
  gabor->add_option("--max-iters", gb.max_iters, "FISTA iterations")->capture_default_str();
  gabor->add_option("--seed", gb.seed, "random seed")->capture_default_str();
  gabor->add_option("--out", gabor_out, "output prefix")->capture_default_str();

  // diag
  std::string diag_ensemble = "gaussian", diag_matrix, diag_out;
  std::size_t diag_n = 4, diag_l = 8, rip_k = 0, max_cols = 20, max_subsets = 200000;
  std::uint64_t diag_seed = 1;
  bool diag_raw = false;
  auto* diag = app.add_subcommand("diag", "coherence, Welch bound, spark and RIP of a matrix");
  diag->add_option("--ensemble", diag_ensemble, "matrix ensemble")
      ->check(kEnsembles)
      ->capture_default_str();
  diag->add_option("--n", diag_n, "rows")->capture_default_str();
  diag->add_option("--l", diag_l, "columns")->capture_default_str();
  diag->add_option("--seed", diag_seed, "random seed")->capture_default_str();
  diag->add_flag("--no-normalize", diag_raw, "keep raw column scaling");
  diag->add_option("--matrix", diag_matrix, "read the matrix from CSV instead");
  diag->add_option("--rip", rip_k, "also compute delta_k for this k (0: skip)")
      ->capture_default_str();
  diag->add_option("--max-cols", max_cols, "exhaustive-search column guard")
      ->capture_default_str();
  diag->add_option("--max-subsets", max_subsets, "exhaustive-search subset guard")
      ->capture_default_str();
  diag->add_option("--out", diag_out, "optional matrix CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (solve->parsed()) {
      const std::string meta = config_echo(solve);
      sk_trial* t = nullptr;
      check(sk_trial_run(&solve_args.finish(), &t), "solve");
      const std::size_t len = sk_trial_summary(t, nullptr, 0);
      std::string line(len, '\0');
      sk_trial_summary(t, line.data(), len + 1);
      std::cout << line << '\n';
      const sk_status s = sk_trial_write_csv(t, solve_out.c_str(), meta.c_str());
      sk_trial_free(t);
      check(s, "write");
    } else if (curve->parsed()) {
      const std::string meta = config_echo(curve);
      sk_curve* c = nullptr;
      check(sk_curve_run(&curve_args.finish(), curve_trials, k_min, k_max, curve_workers, &c),
            "curve");
      for (std::size_t i = 0; i < sk_curve_size(c); ++i) {
        std::size_t k = 0, m = 0, total = 0;
        sk_curve_point(c, i, &k, &m, &total);
        std::cout << "k=" << k << " m=" << m << " M=" << total << '\n';
      }
      const sk_status s = sk_curve_write_csv(c, curve_out.c_str(), meta.c_str());
      sk_curve_free(c);
      check(s, "write");
    } else if (phase->parsed()) {
      const std::string meta = config_echo(phase);
      sk_phase* p = nullptr;
      check(sk_phase_run(&phase_args.finish(), grid, phase_trials, phase_workers, &p), "phase");
      sk_status s = sk_phase_write_csv(p, (phase_out + ".csv").c_str(), meta.c_str());
      if (s == SK_OK) s = sk_phase_write_pgm(p, (phase_out + ".pgm").c_str(), meta.c_str());
      if (s == SK_OK && !timing_out.empty()) s = sk_phase_write_timing(p, timing_out.c_str());
      sk_phase_free(p);
      check(s, "write");
      std::cout << "wrote " << phase_out << ".csv and " << phase_out << ".pgm\n";
    } else if (online->parsed()) {
      const std::string meta = config_echo(online);
      sk_online* o = nullptr;
      check(sk_online_run(&on, &o), "online");
      sk_status s = SK_OK;
      for (const char* algo : {"adcosamp", "spapsm"}) {
        if (s == SK_OK)
          s = sk_online_write_csv(o, algo, (online_out + "_" + algo + ".csv").c_str(),
                                  meta.c_str());
        sk_trace_summary sum{};
        if (s == SK_OK) s = sk_online_summary(o, algo, &sum);
        if (s == SK_OK)
          std::printf("%s start_db=%.3f pre_change_db=%.3f spike_db=%.3f reconverge=%ld "
                      "steady_db=%.3f\n",
                      algo, sum.start_db, sum.pre_change_db, sum.spike_db,
                      sum.reconverge_samples, sum.steady_state_db);
      }
      sk_online_free(o);
      check(s, "online");
    } else if (gabor->parsed()) {
      const std::string meta = config_echo(gabor);
      sk_gabor* g = nullptr;
      check(sk_gabor_demo(&gb, &g), "gabor-demo");
      const sk_status s = sk_gabor_write(g, gabor_out.c_str(), meta.c_str());
      std::printf("atoms=%zu relative_error=%.6g\n", sk_gabor_atoms(g),
                  sk_gabor_relative_error(g));
      sk_gabor_free(g);
      check(s, "write");
    } else if (diag->parsed()) {
      sk_matrix* m = nullptr;
      if (!diag_matrix.empty())
        check(sk_matrix_read_csv(diag_matrix.c_str(), &m), "read matrix");
      else
        check(sk_matrix_generate(diag_ensemble.c_str(), diag_n, diag_l, diag_seed,
                                 diag_raw ? 0 : 1, &m),
              "generate");
      const std::size_t rows = sk_matrix_rows(m), cols = sk_matrix_cols(m);
      std::printf("rows=%zu cols=%zu\n", rows, cols);
      double mu = 0.0;
      check(sk_matrix_coherence(m, &mu), "coherence");
      std::printf("coherence=%.17g\n", mu);
      double welch = 0.0;
      if (cols > rows && sk_welch_bound(rows, cols, &welch) == SK_OK)
        std::printf("welch_bound=%.17g\n", welch);
      std::size_t sp = 0;
      const sk_status ss = sk_matrix_spark(m, max_cols, max_subsets, &sp);
      if (ss == SK_OK)
        std::printf("spark=%zu\n", sp);
      else
        std::printf("spark=unavailable (%s)\n", sk_last_error());
      if (rip_k > 0) {
        double delta = 0.0;
        const sk_status rs = sk_matrix_rip(m, rip_k, max_cols, max_subsets, &delta);
        if (rs == SK_OK)
          std::printf("rip_delta_%zu=%.17g\n", rip_k, delta);
        else
          std::printf("rip_delta_%zu=unavailable (%s)\n", rip_k, sk_last_error());
      }
      sk_status s = SK_OK;
      if (!diag_out.empty())
        s = sk_matrix_write_csv(m, diag_out.c_str(), config_echo(diag).c_str());
      sk_matrix_free(m);
      check(s, "write");
    }
  } catch (const RuntimeFailure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kRuntimeError;
  }
  return 0;
}
