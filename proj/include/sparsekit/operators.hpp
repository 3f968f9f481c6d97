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

// Entrywise shrinkage rules and metric projections onto convex sets.

#ifndef SPARSEKIT_OPERATORS_HPP
#define SPARSEKIT_OPERATORS_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace sparsekit {

using Vector = Eigen::VectorXd;

namespace rule {
// sign(v)(|v| - lambda)_+. The threshold is the one applied, so a loss
// without the 1/2 factor needs lambda/2 here and ISTA needs lambda * mu.
struct Soft { double lambda; };
// v * 1{|v| > lambda}; the boundary |v| == lambda is zeroed.
struct HardLevel { double lambda; };
// Keep the k largest magnitudes; ties go to the lower index.
struct TopK { std::size_t k; };
// Smoothly clipped absolute deviation. Seams belong to the lower branch.
struct Scad { double lambda; double alpha = 3.7; };
// Nonnegative garrote: v - lambda^2 / v for |v| > lambda, else 0.
struct Garrote { double lambda; };
}  // namespace rule

using ThresholdRule =
    std::variant<rule::Soft, rule::HardLevel, rule::TopK, rule::Scad, rule::Garrote>;

Vector apply_threshold(const ThresholdRule& r, const Vector& v);

double soft_threshold(double v, double lambda) noexcept;

// Indices of the k largest |v| (ties -> lower index), in descending
// magnitude order.
std::vector<std::size_t> top_k_indices(const Vector& v, std::size_t k);

struct Hyperslab {
  Vector normal;  // a
  double center = 0.0;      // c
  double half_width = 0.0;  // epsilon
};

// { x : |<a, x> - c| <= epsilon }.
Vector project_hyperslab(const Hyperslab& s, const Vector& theta);

struct WeightedL1Ball {
  Vector weights;
  double radius = 1.0;
};

// Exact Euclidean projection onto { z : sum_i w_i |z_i| <= rho }.
Vector project_weighted_l1_ball(const WeightedL1Ball& b, const Vector& theta);
Vector project_l1_ball(double rho, const Vector& theta);

double weighted_l1_norm(const Vector& w, const Vector& v);

}  // namespace sparsekit

#endif  // SPARSEKIT_OPERATORS_HPP
