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

#include "sparsekit/solvers_online.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sparsekit/error.hpp"
#include "sparsekit/operators.hpp"
#include "sparsekit/rng.hpp"

namespace sparsekit {

OnlineState::OnlineState(std::size_t l)
    : estimate(Vector::Zero(static_cast<Eigen::Index>(l))),
      correlation(Vector::Zero(static_cast<Eigen::Index>(l))),
      lms_estimate(Vector::Zero(static_cast<Eigen::Index>(l))),
      last_input(Vector::Zero(static_cast<Eigen::Index>(l))) {}

namespace {

void check_sample(const OnlineState& s, const StreamSample& x) {
  require(x.input.size() == s.estimate.size(), ErrorCode::DimensionMismatch,
          "stream sample length differs from the state dimension");
}

}  // namespace

void adcosamp_update(OnlineState& s, const StreamSample& sample, const OnlineConfig& cfg) {
  check_sample(s, sample);
  const auto l = static_cast<std::size_t>(s.estimate.size());
  require(cfg.sparsity_k >= 1 && cfg.sparsity_k <= l, ErrorCode::InvalidArgument,
          "AdCoSaMP sparsity must lie in [1, l]");
  const Vector& x = sample.input;
  if (s.steps == 0) {
    // theta(1) = 0, p(1) = 0, e(1) = y_1.
    s.last_error = sample.output;
    s.last_input = x;
    s.steps = 1;
    return;
  }
  s.correlation = cfg.forgetting_beta * s.correlation + s.last_input * s.last_error;

  std::vector<bool> in_support(l, false);
  for (std::size_t i = 0; i < l; ++i)
    if (s.estimate(static_cast<Eigen::Index>(i)) != 0.0) in_support[i] = true;
  for (auto i : top_k_indices(s.correlation, std::min(2 * cfg.sparsity_k, l)))
    in_support[i] = true;

  double fit = 0.0, energy = 0.0;
  for (std::size_t i = 0; i < l; ++i) {
    if (!in_support[i]) continue;
    const auto j = static_cast<Eigen::Index>(i);
    fit += x(j) * s.lms_estimate(j);
    energy += x(j) * x(j);
  }
  const double err = sample.output - fit;
  const double step = cfg.normalized_lms ? cfg.lms_mu / (energy + 1e-12) : cfg.lms_mu;
  Vector on_support = Vector::Zero(static_cast<Eigen::Index>(l));
  for (std::size_t i = 0; i < l; ++i) {
    if (!in_support[i]) continue;
    const auto j = static_cast<Eigen::Index>(i);
    s.lms_estimate(j) += step * x(j) * err;
    on_support(j) = s.lms_estimate(j);
  }

  s.estimate = apply_threshold(rule::TopK{cfg.sparsity_k}, on_support);
  s.last_error = sample.output - x.dot(s.estimate);
  s.last_input = x;
  ++s.steps;
}

void spapsm_update(OnlineState& s, const StreamSample& sample, const OnlineConfig& cfg) {
  check_sample(s, sample);
  require(cfg.q_slabs >= 1, ErrorCode::InvalidArgument, "SpAPSM needs q >= 1");
  require(cfg.extrapolation_scale > 0 && cfg.extrapolation_scale < 2, ErrorCode::InvalidArgument,
          "extrapolation scale must lie in (0, 2)");
  s.slab_buffer.push_back(sample);
  while (s.slab_buffer.size() > cfg.q_slabs) s.slab_buffer.pop_front();

  const Vector theta = s.estimate;
  const double omega = 1.0 / static_cast<double>(s.slab_buffer.size());
  Vector combined = Vector::Zero(theta.size());
  double spread = 0.0;
  for (const auto& slab : s.slab_buffer) {
    const Vector proj = project_hyperslab({slab.input, slab.output, cfg.slab_epsilon}, theta);
    combined += omega * proj;
    spread += omega * (proj - theta).squaredNorm();
  }
  const double denom = (combined - theta).squaredNorm();
  s.last_extrapolation = denom < 1e-14 ? 1.0 : spread / denom;
  const double mu_n = cfg.extrapolation_scale * s.last_extrapolation;
  const Vector moved = theta + mu_n * (combined - theta);

  Vector weights = Vector::Ones(theta.size());
  double radius = cfg.ball_radius;
  if (cfg.use_weights) {
    require(cfg.weight_epsilon > 0, ErrorCode::InvalidArgument, "weight epsilon must be positive");
    weights = (theta.array().abs() + cfg.weight_epsilon).inverse().matrix();
    if (radius <= 0) radius = static_cast<double>(cfg.sparsity_k);
  }
  require(radius > 0, ErrorCode::InvalidArgument, "SpAPSM ball radius must be positive");
  s.estimate = project_weighted_l1_ball({weights, radius}, moved);
  s.last_error = sample.output - sample.input.dot(s.estimate);
  s.last_input = sample.input;
  ++s.steps;
}

OnlineState adcosamp_step(OnlineState state, const StreamSample& sample, const OnlineConfig& cfg) {
  adcosamp_update(state, sample, cfg);
  return state;
}

OnlineState spapsm_step(OnlineState state, const StreamSample& sample, const OnlineConfig& cfg) {
  spapsm_update(state, sample, cfg);
  return state;
}

std::string_view to_string(OnlineAlgorithm a) noexcept {
  return a == OnlineAlgorithm::AdCoSaMP ? "adcosamp" : "spapsm";
}

std::optional<OnlineAlgorithm> parse_online_algorithm(std::string_view name) noexcept {
  if (name == "adcosamp") return OnlineAlgorithm::AdCoSaMP;
  if (name == "spapsm") return OnlineAlgorithm::SpAPSM;
  return std::nullopt;
}

Matrix haar_matrix(std::size_t l) {
  require(l >= 1 && (l & (l - 1)) == 0, ErrorCode::InvalidArgument,
          "Haar transform length must be a power of two");
  // Analysis rows: H_2n = [H_n (x) [1 1] ; I_n (x) [1 -1]] / sqrt(2).
  Matrix h = Matrix::Ones(1, 1);
  const double r = 1.0 / std::sqrt(2.0);
  while (static_cast<std::size_t>(h.rows()) < l) {
    const auto n = h.rows();
    Matrix next = Matrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) {
        next(i, 2 * j) = r * h(i, j);
        next(i, 2 * j + 1) = r * h(i, j);
      }
    for (Eigen::Index i = 0; i < n; ++i) {
      next(n + i, 2 * i) = r;
      next(n + i, 2 * i + 1) = -r;
    }
    h = std::move(next);
  }
  return h.transpose();
}

OnlineStream generate_stream(const OnlineScenario& sc) {
  require(sc.length >= 1, ErrorCode::InvalidArgument, "scenario length must be positive");
  require(sc.sparsity <= sc.length, ErrorCode::InvalidArgument,
          "scenario sparsity exceeds its length");
  require(sc.changed_coefficients <= sc.length, ErrorCode::InvalidArgument,
          "more changed coefficients than entries");
  require(sc.noise_variance >= 0, ErrorCode::InvalidArgument, "noise variance must be >= 0");
  const auto l = static_cast<Eigen::Index>(sc.length);

  OnlineStream out;
  out.phi = sc.haar ? haar_matrix(sc.length) : Matrix::Identity(l, l);
  out.change_at = sc.change_at;

  CounterRng truth_rng(derive_seed(sc.seed, 1));
  std::vector<std::size_t> perm(sc.length);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = 0; i < sc.sparsity; ++i)
    std::swap(perm[i], perm[i + truth_rng.below(sc.length - i)]);
  out.truth_before = Vector::Zero(l);
  for (std::size_t i = 0; i < sc.sparsity; ++i)
    out.truth_before(static_cast<Eigen::Index>(perm[i])) = truth_rng.normal();
  out.truth_after = out.truth_before;
  if (sc.change_at != 0) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 0; i < sc.changed_coefficients; ++i) {
      std::swap(perm[i], perm[i + truth_rng.below(sc.length - i)]);
      out.truth_after(static_cast<Eigen::Index>(perm[i])) = truth_rng.uniform(-1.0, 1.0);
    }
  }

  CounterRng input_rng(derive_seed(sc.seed, 2));
  CounterRng noise_rng(derive_seed(sc.seed, 3));
  const double sigma = std::sqrt(sc.noise_variance);
  const Matrix phi_t = out.phi.transpose();
  out.samples.reserve(sc.samples);
  Vector raw(l);
  for (std::size_t n = 1; n <= sc.samples; ++n) {
    for (Eigen::Index i = 0; i < l; ++i) raw(i) = input_rng.normal();
    StreamSample s;
    s.input = phi_t * raw;
    s.output = s.input.dot(out.truth_at(n)) + sigma * noise_rng.normal();
    s.time = n;
    out.samples.push_back(std::move(s));
  }
  return out;
}

OnlineRun run_stream(const OnlineStream& stream, OnlineAlgorithm algo, const OnlineConfig& cfg) {
  const auto l = static_cast<std::size_t>(stream.phi.cols());
  OnlineRun run{OnlineState(l), {}};
  run.mse_log10.reserve(stream.samples.size());
  for (const auto& sample : stream.samples) {
    if (algo == OnlineAlgorithm::AdCoSaMP)
      adcosamp_update(run.state, sample, cfg);
    else
      spapsm_update(run.state, sample, cfg);
    const Vector diff = stream.phi * (stream.truth_at(sample.time) - run.state.estimate);
    const double mse = 0.5 * diff.squaredNorm();
    run.state.mse_history.push_back(mse);
    run.mse_log10.push_back(std::log10(std::max(mse, 1e-300)));
  }
  return run;
}

}  // namespace sparsekit
