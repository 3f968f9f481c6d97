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

// Experiment engine: sparse problem generation, single trials, recovery
// curves, phase-transition grids, online traces and the Gabor demo.

#ifndef SPARSEKIT_HARNESS_HPP
#define SPARSEKIT_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparsekit/dictionaries.hpp"
#include "sparsekit/ensembles.hpp"
#include "sparsekit/io.hpp"
#include "sparsekit/solvers_batch.hpp"
#include "sparsekit/solvers_online.hpp"

namespace sparsekit {

enum class ValueDistribution { Cars, Gaussian, Uniform, DoubleExponential, Cauchy };
enum class SupportRule { ExactK, Bernoulli };

std::string_view to_string(ValueDistribution v) noexcept;
std::optional<ValueDistribution> parse_value_distribution(std::string_view name) noexcept;
std::string_view to_string(SupportRule r) noexcept;
std::optional<SupportRule> parse_support_rule(std::string_view name) noexcept;

struct VectorEnsemble {
  ValueDistribution kind = ValueDistribution::Gaussian;
  std::size_t sparsity_k = 1;
  SupportRule support = SupportRule::ExactK;
};

Vector gen_sparse_vector(const VectorEnsemble& ens, std::size_t l, std::uint64_t seed);

struct SolverSpec {
  Algorithm algorithm = Algorithm::Omp;
  BatchConfig config;  // unset sparsity_k means the true k of the trial
  double lambda_scale = 0.0;  // > 0: lambda = lambda_scale * ||X^T y||_inf
  double step_scale = 0.0;    // > 0: step_mu = step_scale / lambda_max(X^T X)
  bool debias = false;        // least-squares refit on the estimate's support
  bool omp_k_steps = true;    // OMP stops after k selections
};

// Concrete configuration handed to the solver for one problem.
BatchConfig resolve_config(const SolverSpec& s, const RegressionProblem& p, std::size_t true_k);
RecoveryResult run_solver(const SolverSpec& s, const RegressionProblem& p, std::size_t true_k);

struct TrialSpec {
  Ensemble matrix_ensemble = Ensemble::Gaussian;
  bool normalize = true;
  VectorEnsemble vector;
  std::size_t n = 20;
  std::size_t l = 50;
  double noise_sigma = 0.0;
  SolverSpec solver;
  double success_tol = 1e-4;
  std::uint64_t seed = 0;
};

struct TrialRecord {
  bool success = false;
  double relative_error = 0.0;
  bool support_match = false;
  std::size_t iterations = 0;
  double residual_norm = 0.0;
  bool converged = false;
  double wall_seconds = 0.0;
  std::string failure;  // solver error text, empty on a clean run
  Vector truth;
  Vector estimate;
};

// Matrix, vector and noise draw from independent streams of `seed`.
RegressionProblem make_problem(const TrialSpec& spec);
TrialRecord run_trial(const TrialSpec& spec);

// Worker count from SPARSEKIT_WORKERS, else the processor count.
std::size_t default_workers();

struct CurvePoint {
  std::size_t k = 0;
  double ratio = 0.0;  // k / N
  std::size_t successes = 0;
  std::size_t trials = 0;
  double probability() const { return trials ? double(successes) / double(trials) : 0.0; }
};

struct CurveSpec {
  TrialSpec base;  // fixes N, l, ensembles and solver; base.vector.sparsity_k is swept
  std::size_t trials = 50;
  std::size_t k_min = 1;
  std::size_t k_max = 0;  // 0: N
};

std::vector<CurvePoint> recovery_curve(const CurveSpec& spec, std::size_t workers = 0);
CsvTable curve_table(const std::vector<CurvePoint>& curve);

struct PhaseSpec {
  std::size_t l = 100;
  std::size_t grid = 20;
  std::size_t trials = 25;
  TrialSpec base;  // N, k and seed are set per cell and trial
};

struct PhaseCell {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t successes = 0;
  std::size_t trials = 0;
  double median_wall_seconds = 0.0;
  double probability() const { return trials ? double(successes) / double(trials) : 0.0; }
};

// Row r holds alpha = (r+1)/grid, column c holds beta = (c+1)/grid.
struct PhaseGrid {
  std::size_t grid = 0;
  std::vector<PhaseCell> cells;  // row-major
  const PhaseCell& at(std::size_t row, std::size_t col) const { return cells[row * grid + col]; }
};

PhaseGrid phase_grid(const PhaseSpec& spec, std::size_t workers = 0);
CsvTable phase_table(const PhaseGrid& g);
CsvTable phase_timing_table(const PhaseGrid& g);
// grid x grid raster: x = alpha increasing, y = beta increasing upwards.
std::vector<std::uint8_t> phase_heatmap(const PhaseGrid& g);

// Median filter with a centred window. Out-of-range taps read as 0 when
// zero_pad is set; otherwise the window shrinks at the edges.
std::vector<double> median_smooth(const std::vector<double>& v, std::size_t window,
                                  bool zero_pad = true);

struct TraceSummary {
  double start_db = 0.0;       // mean of the first 10 samples
  double pre_change_db = 0.0;  // mean of the 100 samples before the change
  double spike_db = 0.0;       // peak just after the change minus pre_change_db
  std::optional<std::size_t> reconverge_samples;
  double steady_state_db = 0.0;  // mean of the last 200 samples
};

// `mse_log10` holds log10 MSE per sample; summaries are in dB (10 log10).
TraceSummary summarize_trace(const std::vector<double>& mse_log10, std::size_t change_at);

struct OnlineExperimentSpec {
  OnlineScenario scenario;
  OnlineConfig adcosamp;
  OnlineConfig spapsm;
  // Independent realizations averaged (in linear MSE) into each learning
  // curve; run r uses scenario seed derive_seed(seed, r) when runs > 1.
  std::size_t runs = 20;
};

OnlineExperimentSpec default_online_experiment();

struct OnlineExperimentResult {
  std::vector<double> adcosamp_log10;  // log10 of the run-averaged MSE per sample
  std::vector<double> spapsm_log10;
  TraceSummary adcosamp_summary;
  TraceSummary spapsm_summary;
};

OnlineExperimentResult online_experiment(const OnlineExperimentSpec& spec,
                                         std::size_t workers = 0);
CsvTable trace_table(const std::vector<double>& mse_log10, OnlineAlgorithm algo,
                     std::uint64_t seed);

struct GaborDemoSpec {
  std::size_t length = 256;
  double sigma = 0.0;           // 0: length / 16
  std::size_t time_step = 16;   // alpha
  std::size_t freq_step = 8;    // beta
  std::size_t measurements = 0;  // 0: length / 8
  double lambda_scale = 0.01;
  std::size_t max_iters = 3000;
  std::uint64_t seed = 1;
};

struct GaborDemoResult {
  Vector signal;
  Vector recovered;
  Vector synthesis_coeffs;  // l1 estimate in the dictionary
  Vector dual_coeffs;       // canonical dual applied to the clean signal
  Matrix spectrogram_original;
  Matrix spectrogram_recovered;
  double relative_error = 0.0;
  std::size_t atoms = 0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

// Linear chirp sweeping [l/16, 3l/8] cycles plus a tone at 5l/16 cycles.
Vector demo_signal(std::size_t l);
GaborDemoResult gabor_demo(const GaborDemoSpec& spec);
// Log-scaled, max-normalized; energies `decades` below the peak map to 0.
std::vector<std::uint8_t> spectrogram_pixels(const Matrix& energy, double decades = 6.0);
CsvTable decay_table(const GaborDemoResult& r);

}  // namespace sparsekit

#endif  // SPARSEKIT_HARNESS_HPP
