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

#include "sparsekit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <numeric>
#include <thread>

#include "sparsekit/error.hpp"
#include "sparsekit/operators.hpp"
#include "sparsekit/rng.hpp"

namespace sparsekit {

namespace {

// Runs fn(0..count-1) on a pool; fn must write only to its own slot.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  if (workers == 0) workers = default_workers();
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(count);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

double draw_value(ValueDistribution kind, CounterRng& rng) {
  while (true) {
    double v = 0.0;
    switch (kind) {
      case ValueDistribution::Cars:
        return rng.coin(0.5) ? 1.0 : -1.0;
      case ValueDistribution::Gaussian:
        v = rng.normal();
        break;
      case ValueDistribution::Uniform:
        v = rng.uniform(-1.0, 1.0);
        break;
      case ValueDistribution::DoubleExponential: {
        const double u = rng.uniform() - 0.5;
        v = -std::copysign(1.0, u) * std::log1p(-2.0 * std::abs(u));
        break;
      }
      case ValueDistribution::Cauchy:
        v = std::tan(std::numbers::pi * (rng.uniform() - 0.5));
        break;
    }
    if (v != 0.0 && std::isfinite(v)) return v;
  }
}

std::vector<std::size_t> support_of(const Vector& v) {
  std::vector<std::size_t> s;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0.0) s.push_back(static_cast<std::size_t>(i));
  return s;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double hi = v[mid];
  if (v.size() % 2) return hi;
  const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

double mean_db(const std::vector<double>& log10_mse, std::size_t begin, std::size_t end) {
  end = std::min(end, log10_mse.size());
  if (begin >= end) return 0.0;
  double s = 0.0;
  for (std::size_t i = begin; i < end; ++i) s += 10.0 * log10_mse[i];
  return s / static_cast<double>(end - begin);
}

}  // namespace

std::string_view to_string(ValueDistribution v) noexcept {
  switch (v) {
    case ValueDistribution::Cars: return "cars";
    case ValueDistribution::Gaussian: return "gaussian";
    case ValueDistribution::Uniform: return "uniform";
    case ValueDistribution::DoubleExponential: return "laplace";
    case ValueDistribution::Cauchy: return "cauchy";
  }
  return "?";
}

std::optional<ValueDistribution> parse_value_distribution(std::string_view name) noexcept {
  if (name == "cars") return ValueDistribution::Cars;
  if (name == "gaussian") return ValueDistribution::Gaussian;
  if (name == "uniform") return ValueDistribution::Uniform;
  if (name == "laplace" || name == "double-exponential") return ValueDistribution::DoubleExponential;
  if (name == "cauchy") return ValueDistribution::Cauchy;
  return std::nullopt;
}

std::string_view to_string(SupportRule r) noexcept {
  return r == SupportRule::ExactK ? "exact" : "bernoulli";
}

std::optional<SupportRule> parse_support_rule(std::string_view name) noexcept {
  if (name == "exact") return SupportRule::ExactK;
  if (name == "bernoulli") return SupportRule::Bernoulli;
  return std::nullopt;
}

Vector gen_sparse_vector(const VectorEnsemble& ens, std::size_t l, std::uint64_t seed) {
  require(ens.sparsity_k <= l, ErrorCode::InvalidArgument, "sparsity k exceeds the length l");
  CounterRng rng(seed);
  Vector theta = Vector::Zero(static_cast<Eigen::Index>(l));
  if (ens.sparsity_k == 0) return theta;
  if (ens.support == SupportRule::ExactK) {
    std::vector<std::size_t> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < ens.sparsity_k; ++i)
      std::swap(perm[i], perm[i + rng.below(l - i)]);
    std::sort(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(ens.sparsity_k));
    for (std::size_t i = 0; i < ens.sparsity_k; ++i)
      theta(static_cast<Eigen::Index>(perm[i])) = draw_value(ens.kind, rng);
  } else {
    const double p = static_cast<double>(ens.sparsity_k) / static_cast<double>(l);
    for (std::size_t i = 0; i < l; ++i)
      if (rng.coin(p)) theta(static_cast<Eigen::Index>(i)) = draw_value(ens.kind, rng);
  }
  return theta;
}

BatchConfig resolve_config(const SolverSpec& s, const RegressionProblem& p, std::size_t true_k) {
  BatchConfig cfg = s.config;
  if (!cfg.sparsity_k) cfg.sparsity_k = true_k;
  if (s.lambda_scale > 0)
    cfg.lambda = s.lambda_scale * (p.X().transpose() * p.y()).cwiseAbs().maxCoeff();
  if (s.step_scale > 0) {
    const double lmax = gram_spectral_radius(p.X());
    if (lmax > 0) cfg.step_mu = s.step_scale / lmax;
  }
  if (s.algorithm == Algorithm::Omp && s.omp_k_steps)
    cfg.max_iters = std::min(cfg.max_iters, *cfg.sparsity_k);
  return cfg;
}

RecoveryResult run_solver(const SolverSpec& s, const RegressionProblem& p, std::size_t true_k) {
  RecoveryResult r = solve(p, s.algorithm, resolve_config(s, p, true_k));
  if (!s.debias || r.support.empty() || r.support.size() > p.matrix.rows()) return r;
  Matrix sub(p.X().rows(), static_cast<Eigen::Index>(r.support.size()));
  for (std::size_t j = 0; j < r.support.size(); ++j)
    sub.col(static_cast<Eigen::Index>(j)) = p.X().col(static_cast<Eigen::Index>(r.support[j]));
  Eigen::ColPivHouseholderQR<Matrix> qr(sub);
  qr.setThreshold(1e-10);
  if (qr.rank() < sub.cols()) return r;
  const Vector z = qr.solve(p.y());
  r.estimate.setZero();
  for (std::size_t j = 0; j < r.support.size(); ++j)
    r.estimate(static_cast<Eigen::Index>(r.support[j])) = z(static_cast<Eigen::Index>(j));
  r.support = support_of(r.estimate);
  r.residual_norm = (p.y() - p.X() * r.estimate).norm();
  return r;
}

RegressionProblem make_problem(const TrialSpec& spec) {
  require(spec.noise_sigma >= 0, ErrorCode::InvalidArgument, "noise sigma must be >= 0");
  SensingMatrix x = SensingMatrix::generate(spec.matrix_ensemble, spec.n, spec.l,
                                            derive_seed(spec.seed, 1), spec.normalize);
  Vector truth = gen_sparse_vector(spec.vector, spec.l, derive_seed(spec.seed, 2));
  Vector y = x.entries() * truth;
  if (spec.noise_sigma > 0) {
    CounterRng noise(derive_seed(spec.seed, 3));
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) += spec.noise_sigma * noise.normal();
  }
  return RegressionProblem(std::move(x), std::move(y), std::move(truth), spec.noise_sigma);
}

TrialRecord run_trial(const TrialSpec& spec) {
  const RegressionProblem p = make_problem(spec);
  TrialRecord rec;
  rec.truth = *p.truth;
  const auto truth_support = support_of(rec.truth);
  const auto start = std::chrono::steady_clock::now();
  try {
    const RecoveryResult r = run_solver(spec.solver, p, truth_support.size());
    rec.estimate = r.estimate;
    rec.iterations = r.iterations;
    rec.residual_norm = r.residual_norm;
    rec.converged = r.converged;
  } catch (const Error& e) {
    rec.failure = e.what();
    rec.estimate = Vector::Zero(rec.truth.size());
  }
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const double truth_norm = rec.truth.norm();
  const double err = (rec.estimate - rec.truth).norm();
  rec.relative_error = truth_norm > 0 ? err / truth_norm : err;
  if (rec.estimate.allFinite()) {
    auto top = top_k_indices(rec.estimate, truth_support.size());
    std::sort(top.begin(), top.end());
    rec.support_match = top == truth_support;
  }
  if (!rec.failure.empty() || !rec.estimate.allFinite())
    rec.success = false;
  else if (spec.noise_sigma == 0.0)
    rec.success = rec.relative_error <= spec.success_tol;
  else
    rec.success = rec.support_match;
  return rec;
}

std::size_t default_workers() {
  if (const char* env = std::getenv("SPARSEKIT_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CurvePoint> recovery_curve(const CurveSpec& spec, std::size_t workers) {
  require(spec.trials >= 1, ErrorCode::InvalidArgument, "at least one trial per point");
  const std::size_t n = spec.base.n;
  const std::size_t k_max = spec.k_max ? spec.k_max : n;
  require(spec.k_min >= 1 && spec.k_min <= k_max, ErrorCode::InvalidArgument,
          "sparsity range is empty");
  require(k_max <= spec.base.l, ErrorCode::InvalidArgument, "sparsity exceeds the length l");
  const std::size_t points = k_max - spec.k_min + 1;
  std::vector<char> ok(points * spec.trials, 0);
  parallel_for(ok.size(), workers, [&](std::size_t job) {
    const std::size_t k = spec.k_min + job / spec.trials;
    TrialSpec t = spec.base;
    t.vector.sparsity_k = k;
    t.seed = derive_seed(spec.base.seed, k, job % spec.trials);
    ok[job] = run_trial(t).success ? 1 : 0;
  });
  std::vector<CurvePoint> curve(points);
  for (std::size_t i = 0; i < points; ++i) {
    auto& pt = curve[i];
    pt.k = spec.k_min + i;
    pt.ratio = static_cast<double>(pt.k) / static_cast<double>(n);
    pt.trials = spec.trials;
    for (std::size_t t = 0; t < spec.trials; ++t) pt.successes += ok[i * spec.trials + t];
  }
  return curve;
}

CsvTable curve_table(const std::vector<CurvePoint>& curve) {
  CsvTable t;
  t.columns = {"k", "k_over_n", "m", "M", "probability"};
  for (const auto& p : curve)
    t.rows.push_back({std::to_string(p.k), format_double(p.ratio), std::to_string(p.successes),
                      std::to_string(p.trials), format_double(p.probability())});
  return t;
}

PhaseGrid phase_grid(const PhaseSpec& spec, std::size_t workers) {
  require(spec.grid >= 1, ErrorCode::InvalidArgument, "grid must have at least one cell");
  require(spec.trials >= 1, ErrorCode::InvalidArgument, "at least one trial per cell");
  require(spec.l >= 1, ErrorCode::InvalidArgument, "length l must be positive");
  PhaseGrid g;
  g.grid = spec.grid;
  g.cells.resize(spec.grid * spec.grid);
  const auto gd = static_cast<double>(spec.grid);
  for (std::size_t r = 0; r < spec.grid; ++r)
    for (std::size_t c = 0; c < spec.grid; ++c) {
      PhaseCell& cell = g.cells[r * spec.grid + c];
      cell.alpha = static_cast<double>(r + 1) / gd;
      cell.beta = static_cast<double>(c + 1) / gd;
      cell.n = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::lround(cell.alpha * static_cast<double>(spec.l))));
      cell.k = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::lround(cell.beta * static_cast<double>(cell.n))));
      cell.trials = cell.k <= cell.n ? spec.trials : 0;
    }

  const std::size_t jobs = g.cells.size() * spec.trials;
  std::vector<char> ok(jobs, 0);
  std::vector<double> wall(jobs, 0.0);
  parallel_for(jobs, workers, [&](std::size_t job) {
    const std::size_t idx = job / spec.trials;
    const std::size_t trial = job % spec.trials;
    const PhaseCell& cell = g.cells[idx];
    if (cell.trials == 0) return;
    TrialSpec t = spec.base;
    t.l = spec.l;
    t.n = cell.n;
    t.vector.sparsity_k = cell.k;
    t.seed = derive_seed(spec.base.seed, idx / spec.grid, idx % spec.grid, trial);
    const TrialRecord rec = run_trial(t);
    ok[job] = rec.success ? 1 : 0;
    wall[job] = rec.wall_seconds;
  });
  for (std::size_t idx = 0; idx < g.cells.size(); ++idx) {
    PhaseCell& cell = g.cells[idx];
    if (cell.trials == 0) continue;
    std::vector<double> w;
    for (std::size_t t = 0; t < spec.trials; ++t) {
      cell.successes += ok[idx * spec.trials + t];
      w.push_back(wall[idx * spec.trials + t]);
    }
    cell.median_wall_seconds = median(std::move(w));
  }
  return g;
}

CsvTable phase_table(const PhaseGrid& g) {
  CsvTable t;
  t.columns = {"alpha", "beta", "n", "k", "m", "M"};
  for (const auto& c : g.cells)
    t.rows.push_back({format_double(c.alpha), format_double(c.beta), std::to_string(c.n),
                      std::to_string(c.k), std::to_string(c.successes), std::to_string(c.trials)});
  return t;
}

CsvTable phase_timing_table(const PhaseGrid& g) {
  CsvTable t;
  t.columns = {"alpha", "beta", "median_wall_seconds"};
  for (const auto& c : g.cells)
    t.rows.push_back(
        {format_double(c.alpha), format_double(c.beta), format_double(c.median_wall_seconds)});
  return t;
}

std::vector<std::uint8_t> phase_heatmap(const PhaseGrid& g) {
  std::vector<std::uint8_t> px(g.grid * g.grid, 0);
  for (std::size_t r = 0; r < g.grid; ++r)
    for (std::size_t c = 0; c < g.grid; ++c) {
      const PhaseCell& cell = g.at(r, c);
      const std::size_t y = g.grid - 1 - c;
      px[y * g.grid + r] =
          cell.trials ? static_cast<std::uint8_t>(255 * cell.successes / cell.trials) : 0;
    }
  return px;
}

std::vector<double> median_smooth(const std::vector<double>& v, std::size_t window,
                                  bool zero_pad) {
  if (window <= 1 || v.empty()) return v;
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(window / 2);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(v.size());
  std::vector<double> out(v.size());
  std::vector<double> w;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    w.clear();
    for (std::ptrdiff_t j = i - half; j <= i + half; ++j) {
      if (j >= 0 && j < n)
        w.push_back(v[static_cast<std::size_t>(j)]);
      else if (zero_pad)
        w.push_back(0.0);
    }
    out[static_cast<std::size_t>(i)] = median(w);
  }
  return out;
}

TraceSummary summarize_trace(const std::vector<double>& mse_log10, std::size_t change_at) {
  TraceSummary s;
  const std::size_t n = mse_log10.size();
  if (n == 0) return s;
  s.start_db = mean_db(mse_log10, 0, 10);
  s.steady_state_db = mean_db(mse_log10, n > 200 ? n - 200 : 0, n);
  if (change_at == 0 || change_at >= n) {
    s.pre_change_db = mean_db(mse_log10, n > 100 ? n - 100 : 0, n);
    return s;
  }
  // Trace index i holds time i + 1; the new system applies from index change_at.
  s.pre_change_db = mean_db(mse_log10, change_at > 100 ? change_at - 100 : 0, change_at);
  const std::size_t peak_end = std::min(n, change_at + 30);
  std::size_t peak = change_at;
  for (std::size_t i = change_at; i < peak_end; ++i)
    if (mse_log10[i] > mse_log10[peak]) peak = i;
  s.spike_db = 10.0 * mse_log10[peak] - s.pre_change_db;
  std::vector<double> db(mse_log10.begin() + static_cast<std::ptrdiff_t>(peak), mse_log10.end());
  for (double& v : db) v *= 10.0;
  const auto smooth = median_smooth(db, 21, false);
  for (std::size_t i = 0; i < smooth.size(); ++i)
    if (smooth[i] <= s.pre_change_db + 3.0) {
      s.reconverge_samples = peak + i - change_at;
      break;
    }
  return s;
}

OnlineExperimentSpec default_online_experiment() {
  OnlineExperimentSpec spec;
  const double sigma = std::sqrt(spec.scenario.noise_variance);
  spec.adcosamp.sparsity_k = 38;
  spec.adcosamp.lms_mu = 0.007;
  spec.adcosamp.forgetting_beta = 0.99;
  spec.spapsm.sparsity_k = 38;
  spec.spapsm.q_slabs = 32;
  spec.spapsm.slab_epsilon = 1.3 * sigma;
  spec.spapsm.extrapolation_scale = 1.8;
  spec.spapsm.weight_epsilon = 0.05;
  spec.spapsm.use_weights = true;
  return spec;
}

OnlineExperimentResult online_experiment(const OnlineExperimentSpec& spec, std::size_t workers) {
  require(spec.runs >= 1, ErrorCode::InvalidArgument, "at least one run is needed");
  const std::size_t len = spec.scenario.samples;
  std::vector<std::vector<double>> ad(spec.runs), sp(spec.runs);
  parallel_for(spec.runs, workers, [&](std::size_t r) {
    OnlineScenario sc = spec.scenario;
    if (spec.runs > 1) sc.seed = derive_seed(spec.scenario.seed, r);
    const OnlineStream stream = generate_stream(sc);
    ad[r] = run_stream(stream, OnlineAlgorithm::AdCoSaMP, spec.adcosamp).state.mse_history;
    sp[r] = run_stream(stream, OnlineAlgorithm::SpAPSM, spec.spapsm).state.mse_history;
  });
  auto average = [&](const std::vector<std::vector<double>>& runs) {
    std::vector<double> out(len, 0.0);
    for (const auto& run : runs)
      for (std::size_t i = 0; i < len; ++i) out[i] += run[i];
    for (double& v : out) v = std::log10(std::max(v / static_cast<double>(runs.size()), 1e-300));
    return out;
  };
  OnlineExperimentResult res;
  res.adcosamp_log10 = average(ad);
  res.spapsm_log10 = average(sp);
  res.adcosamp_summary = summarize_trace(res.adcosamp_log10, spec.scenario.change_at);
  res.spapsm_summary = summarize_trace(res.spapsm_log10, spec.scenario.change_at);
  return res;
}

CsvTable trace_table(const std::vector<double>& mse_log10, OnlineAlgorithm algo,
                     std::uint64_t seed) {
  CsvTable t;
  t.columns = {"n", "mse_db", "algo", "seed"};
  const std::string name(to_string(algo));
  const std::string seed_text = std::to_string(seed);
  for (std::size_t i = 0; i < mse_log10.size(); ++i)
    t.rows.push_back(
        {std::to_string(i + 1), format_double(10.0 * mse_log10[i]), name, seed_text});
  return t;
}

Vector demo_signal(std::size_t l) {
  require(l >= 16, ErrorCode::InvalidArgument, "demo signal needs at least 16 samples");
  const auto ld = static_cast<double>(l);
  const double f0 = ld / 16.0, f1 = 3.0 * ld / 8.0, tone = 5.0 * ld / 16.0;
  Vector s(static_cast<Eigen::Index>(l));
  for (std::size_t n = 0; n < l; ++n) {
    const double t = static_cast<double>(n) / ld;
    const double chirp = std::cos(2.0 * std::numbers::pi * (f0 * t + 0.5 * (f1 - f0) * t * t));
    s(static_cast<Eigen::Index>(n)) = chirp + 0.5 * std::cos(2.0 * std::numbers::pi * tone * t);
  }
  return s;
}

GaborDemoResult gabor_demo(const GaborDemoSpec& spec) {
  const std::size_t l = spec.length;
  const double sigma = spec.sigma > 0 ? spec.sigma : static_cast<double>(l) / 16.0;
  const std::size_t n = spec.measurements ? spec.measurements : std::max<std::size_t>(1, l / 8);
  require(n <= l, ErrorCode::InvalidArgument, "more measurements than samples");

  GaborDemoResult out;
  out.signal = demo_signal(l);
  const Frame frame(gabor_atoms({l, sigma, spec.time_step, spec.freq_step}));
  out.atoms = frame.size();
  out.lower_bound = frame.lower_bound();
  out.upper_bound = frame.upper_bound();

  const SensingMatrix x =
      SensingMatrix::generate(Ensemble::Bernoulli, n, l, derive_seed(spec.seed, 21), false);
  const Vector y = x.entries() * out.signal;
  RegressionProblem p(SensingMatrix::from_entries(x.entries() * frame.atoms()), y);
  BatchConfig cfg;
  cfg.lambda = spec.lambda_scale * (p.X().transpose() * y).cwiseAbs().maxCoeff();
  cfg.max_iters = spec.max_iters;
  cfg.tol = 1e-10;
  out.synthesis_coeffs = fista(p, cfg).estimate;
  out.recovered = synthesis(frame, out.synthesis_coeffs);
  out.dual_coeffs = canonical_dual(frame).transpose() * out.signal;
  out.relative_error = (out.recovered - out.signal).norm() / out.signal.norm();
  out.spectrogram_original = gabor_spectrogram(out.signal, sigma);
  out.spectrogram_recovered = gabor_spectrogram(out.recovered, sigma);
  return out;
}

std::vector<std::uint8_t> spectrogram_pixels(const Matrix& energy, double decades) {
  require(decades > 0, ErrorCode::InvalidArgument, "dynamic range must be positive");
  const auto bins = energy.rows() / 2 + 1;
  const auto width = energy.cols();
  std::vector<std::uint8_t> px(static_cast<std::size_t>(bins * width), 0);
  const double peak = energy.topRows(bins).maxCoeff();
  if (!(peak > 0)) return px;
  for (Eigen::Index i = 0; i < bins; ++i)
    for (Eigen::Index m = 0; m < width; ++m) {
      const double e = energy(i, m);
      const double level = e > 0 ? 1.0 + std::log10(e / peak) / decades : 0.0;
      const double v = std::floor(255.0 * std::clamp(level, 0.0, 1.0));
      px[static_cast<std::size_t>((bins - 1 - i) * width + m)] = static_cast<std::uint8_t>(v);
    }
  return px;
}

CsvTable decay_table(const GaborDemoResult& r) {
  auto sorted = [](const Vector& v) {
    std::vector<double> a(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) a[static_cast<std::size_t>(i)] = std::abs(v(i));
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
  };
  const auto syn = sorted(r.synthesis_coeffs);
  const auto dual = sorted(r.dual_coeffs);
  CsvTable t;
  t.columns = {"rank", "synthesis", "dual_analysis"};
  for (std::size_t i = 0; i < syn.size(); ++i)
    t.rows.push_back({std::to_string(i + 1), format_double(syn[i]), format_double(dual[i])});
  return t;
}

}  // namespace sparsekit
