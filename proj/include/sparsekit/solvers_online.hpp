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

// Time-recursive sparse estimation: AdCoSaMP (LMS inside the CoSaMP
// support loop) and SpAPSM (averaged hyperslab projections followed by a
// weighted l1 ball projection).

#ifndef SPARSEKIT_SOLVERS_ONLINE_HPP
#define SPARSEKIT_SOLVERS_ONLINE_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace sparsekit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct OnlineConfig {
  std::size_t sparsity_k = 1;  // k, or an overestimate of it
  double lms_mu = 0.5;
  bool normalized_lms = false;
  double forgetting_beta = 1.0;
  double slab_epsilon = 0.0;
  std::size_t q_slabs = 1;
  // <= 0 selects sparsity_k (weighted ball) or is rejected (plain ball).
  double ball_radius = 0.0;
  double extrapolation_scale = 1.0;  // mu_n = scale * M_n, scale in (0, 2)
  double weight_epsilon = 1e-3;
  bool use_weights = true;
};

struct StreamSample {
  Vector input;
  double output = 0.0;
  std::size_t time = 0;
};

struct OnlineState {
  explicit OnlineState(std::size_t l = 0);

  Vector estimate;      // theta(n)
  Vector correlation;   // p(n), AdCoSaMP
  Vector lms_estimate;  // LMS iterate on the active support, AdCoSaMP
  Vector last_input;
  double last_error = 0.0;               // e(n)
  std::deque<StreamSample> slab_buffer;  // SpAPSM
  double last_extrapolation = 1.0;       // M_n of the last SpAPSM step
  std::vector<double> mse_history;
  std::size_t steps = 0;
};

void adcosamp_update(OnlineState& state, const StreamSample& sample, const OnlineConfig& cfg);
void spapsm_update(OnlineState& state, const StreamSample& sample, const OnlineConfig& cfg);

OnlineState adcosamp_step(OnlineState state, const StreamSample& sample, const OnlineConfig& cfg);
OnlineState spapsm_step(OnlineState state, const StreamSample& sample, const OnlineConfig& cfg);

enum class OnlineAlgorithm { AdCoSaMP, SpAPSM };
std::string_view to_string(OnlineAlgorithm a) noexcept;
std::optional<OnlineAlgorithm> parse_online_algorithm(std::string_view name) noexcept;

// Sparse coefficients theta*(n) of s(n) = Phi theta*(n), observed through
// y_n = (Phi^T x_n)^T theta*(n) + noise with x_n ~ N(0, I). A change point
// redraws `changed_coefficients` randomly picked entries uniformly in [-1, 1].
struct OnlineScenario {
  std::size_t length = 256;
  std::size_t sparsity = 25;
  std::size_t samples = 1500;
  std::size_t change_at = 750;  // 0 disables the change
  std::size_t changed_coefficients = 10;
  double noise_variance = 0.1;
  bool haar = true;  // Phi = orthonormal Haar synthesis matrix, else identity
  std::uint64_t seed = 1;
};

struct OnlineStream {
  Matrix phi;
  std::vector<StreamSample> samples;  // regressors already in the Phi domain
  Vector truth_before;
  Vector truth_after;
  std::size_t change_at = 0;

  const Vector& truth_at(std::size_t n) const {
    return (change_at != 0 && n > change_at) ? truth_after : truth_before;
  }
};

OnlineStream generate_stream(const OnlineScenario& scenario);

struct OnlineRun {
  OnlineState state;
  // log10(1/2 ||s - Phi theta(n)||^2), one entry per sample.
  std::vector<double> mse_log10;
};

OnlineRun run_stream(const OnlineStream& stream, OnlineAlgorithm algo, const OnlineConfig& cfg);

// Orthonormal Haar synthesis matrix (columns are basis vectors); l must be
// a power of two.
Matrix haar_matrix(std::size_t l);

}  // namespace sparsekit

#endif  // SPARSEKIT_SOLVERS_ONLINE_HPP
