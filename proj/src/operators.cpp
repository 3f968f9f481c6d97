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

#include "sparsekit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sparsekit/error.hpp"

namespace sparsekit {

namespace {

double sign(double v) noexcept { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

double scad(double v, double lambda, double alpha) noexcept {
  const double a = std::abs(v);
  if (a <= 2.0 * lambda) return sign(v) * std::max(a - lambda, 0.0);
  if (a <= alpha * lambda) return ((alpha - 1.0) * v - alpha * lambda * sign(v)) / (alpha - 2.0);
  return v;
}

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double soft_threshold(double v, double lambda) noexcept {
  return sign(v) * std::max(std::abs(v) - lambda, 0.0);
}

std::vector<std::size_t> top_k_indices(const Vector& v, std::size_t k) {
  const auto n = static_cast<std::size_t>(v.size());
  require(k <= n, ErrorCode::InvalidArgument, "top-k with k larger than the vector length");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto by_magnitude = [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(v(static_cast<Eigen::Index>(a)));
    const double mb = std::abs(v(static_cast<Eigen::Index>(b)));
    return ma > mb || (ma == mb && a < b);
  };
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                    by_magnitude);
  idx.resize(k);
  return idx;
}

Vector apply_threshold(const ThresholdRule& r, const Vector& v) {
  return std::visit(
      overloaded{
          [&](const rule::Soft& s) -> Vector {
            require(s.lambda >= 0, ErrorCode::InvalidArgument, "soft threshold must be >= 0");
            return v.unaryExpr([&](double x) { return soft_threshold(x, s.lambda); });
          },
          [&](const rule::HardLevel& h) -> Vector {
            require(h.lambda >= 0, ErrorCode::InvalidArgument, "hard threshold must be >= 0");
            return v.unaryExpr([&](double x) { return std::abs(x) > h.lambda ? x : 0.0; });
          },
          [&](const rule::TopK& t) -> Vector {
            Vector out = Vector::Zero(v.size());
            for (auto i : top_k_indices(v, t.k)) {
              const auto j = static_cast<Eigen::Index>(i);
              out(j) = v(j);
            }
            return out;
          },
          [&](const rule::Scad& s) -> Vector {
            require(s.lambda >= 0, ErrorCode::InvalidArgument, "SCAD lambda must be >= 0");
            require(s.alpha > 2.0, ErrorCode::InvalidArgument, "SCAD alpha must exceed 2");
            return v.unaryExpr([&](double x) { return scad(x, s.lambda, s.alpha); });
          },
          [&](const rule::Garrote& g) -> Vector {
            require(g.lambda >= 0, ErrorCode::InvalidArgument, "garrote lambda must be >= 0");
            const double l2 = g.lambda * g.lambda;
            return v.unaryExpr(
                [&](double x) { return std::abs(x) > g.lambda ? x - l2 / x : 0.0; });
          },
      },
      r);
}

Vector project_hyperslab(const Hyperslab& s, const Vector& theta) {
  require(s.normal.size() == theta.size(), ErrorCode::DimensionMismatch,
          "hyperslab normal and point differ in length");
  require(s.half_width >= 0, ErrorCode::InvalidArgument, "hyperslab half-width must be >= 0");
  const double nn = s.normal.squaredNorm();
  if (nn == 0.0) fail(ErrorCode::Degenerate, "hyperslab normal vector is zero");
  const double ip = s.normal.dot(theta);
  if (ip > s.center + s.half_width)
    return theta - ((ip - s.center - s.half_width) / nn) * s.normal;
  if (ip < s.center - s.half_width)
    return theta - ((ip - s.center + s.half_width) / nn) * s.normal;
  return theta;
}

double weighted_l1_norm(const Vector& w, const Vector& v) {
  return (w.array() * v.array().abs()).sum();
}

Vector project_weighted_l1_ball(const WeightedL1Ball& b, const Vector& theta) {
  const auto l = static_cast<std::size_t>(theta.size());
  require(b.weights.size() == theta.size(), ErrorCode::DimensionMismatch,
          "ball weights and point differ in length");
  require(b.radius > 0, ErrorCode::InvalidArgument, "ball radius must be positive");
  require((b.weights.array() > 0).all(), ErrorCode::InvalidArgument,
          "ball weights must be positive");
  if (weighted_l1_norm(b.weights, theta) <= b.radius) return theta;

  // tau sorts |theta_i| / w_i in non-ascending order.
  const Vector ratio = theta.array().abs() / b.weights.array();
  std::vector<std::size_t> tau(l);
  std::iota(tau.begin(), tau.end(), 0);
  std::stable_sort(tau.begin(), tau.end(), [&](std::size_t a, std::size_t c) {
    return ratio(static_cast<Eigen::Index>(a)) > ratio(static_cast<Eigen::Index>(c));
  });
  auto at = [&](const Vector& v, std::size_t j) { return v(static_cast<Eigen::Index>(tau[j])); };

  // Prefix sums of w|theta| and w^2 in sorted order.
  std::vector<double> wt(l + 1, 0.0), w2(l + 1, 0.0);
  for (std::size_t j = 0; j < l; ++j) {
    wt[j + 1] = wt[j] + at(b.weights, j) * std::abs(at(theta, j));
    w2[j + 1] = w2[j] + at(b.weights, j) * at(b.weights, j);
  }
  auto level = [&](std::size_t r) { return (wt[r] - b.radius) / w2[r]; };

  // Shrink the active prefix r until every kept ratio exceeds its level.
  std::size_t r = l;
  while (true) {
    const double t = level(r);
    std::size_t j_star = 0;
    for (std::size_t j = r; j >= 1; --j) {
      if (at(ratio, j - 1) > t) {
        j_star = j;
        break;
      }
    }
    if (j_star == r || j_star == 0) break;
    r = j_star;
  }

  const double t = level(r);
  Vector out = Vector::Zero(theta.size());
  for (std::size_t j = 0; j < r; ++j) {
    const auto i = static_cast<Eigen::Index>(tau[j]);
    const double p = std::abs(theta(i)) - t * b.weights(i);
    out(i) = theta(i) >= 0 ? p : -p;
  }
  return out;
}

Vector project_l1_ball(double rho, const Vector& theta) {
  return project_weighted_l1_ball({Vector::Ones(theta.size()), rho}, theta);
}

}  // namespace sparsekit
