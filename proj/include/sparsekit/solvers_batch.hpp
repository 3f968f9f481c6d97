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

// Batch sparse recovery: greedy pursuits, iterative shrinkage and the
// reweighted-l1 outer loop.
//
// All shrinkage solvers minimize  1/2 ||y - X theta||^2 + lambda sum_j w_j |theta_j|
// with w = 1 unless a weight vector is supplied.

#ifndef SPARSEKIT_SOLVERS_BATCH_HPP
#define SPARSEKIT_SOLVERS_BATCH_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sparsekit/ensembles.hpp"

namespace sparsekit {

struct BatchConfig {
  double lambda = 0.0;
  // <= 0 selects the solver default: 0.99 / lambda_max(X^T X) for the
  // shrinkage solvers, 1 for IHT and TST.
  double step_mu = 0.0;
  std::optional<std::size_t> sparsity_k;
  // CSMP candidate count (CoSaMP: 2k, SP: k) and TST stage-1 count (k).
  std::optional<std::size_t> csmp_t;
  std::size_t max_iters = 1000;
  // Greedy solvers: stop once ||y - X theta|| <= tol. Shrinkage solvers:
  // stop once the relative objective change drops below tol.
  double tol = 1e-8;
  double reweight_epsilon = 0.1;
  std::size_t reweight_rounds = 4;
  // IHT only: per-iteration step that maximally reduces the residual on the
  // current support, halved while a support change would not decrease it.
  bool adaptive_step = false;
};

struct RecoveryResult {
  Vector estimate;
  std::vector<std::size_t> support;  // ascending
  std::size_t iterations = 0;
  double residual_norm = 0.0;
  // Objective per iteration for shrinkage solvers (entry 0 is the starting
  // point); residual norm per iteration for greedy solvers.
  std::vector<double> objective_history;
  bool converged = false;
};

enum class Algorithm {
  Omp,
  CoSaMP,
  SubspacePursuit,
  Ista,
  Fista,
  Iht,
  CoordinateDescent,
  Tst,
  ReweightedL1,
};

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
bool is_greedy(Algorithm a) noexcept;

enum class InnerSolver { Ista, Fista, CoordinateDescent };

RecoveryResult omp(const RegressionProblem& p, const BatchConfig& cfg);
RecoveryResult csmp(const RegressionProblem& p, const BatchConfig& cfg);
RecoveryResult ista(const RegressionProblem& p, const BatchConfig& cfg,
                    const Vector* weights = nullptr, const Vector* start = nullptr);
RecoveryResult fista(const RegressionProblem& p, const BatchConfig& cfg,
                     const Vector* weights = nullptr, const Vector* start = nullptr);
RecoveryResult iht(const RegressionProblem& p, const BatchConfig& cfg);
RecoveryResult coordinate_descent(const RegressionProblem& p, const BatchConfig& cfg,
                                  const Vector* weights = nullptr,
                                  const Vector* start = nullptr);
RecoveryResult tst(const RegressionProblem& p, const BatchConfig& cfg);

// Per-round results of the reweighting loop; the last entry is the answer.
std::vector<RecoveryResult> reweighted_l1_rounds(const RegressionProblem& p,
                                                 const BatchConfig& cfg,
                                                 InnerSolver inner);
RecoveryResult reweighted_l1(const RegressionProblem& p, const BatchConfig& cfg,
                             InnerSolver inner = InnerSolver::CoordinateDescent);

// Dispatch by algorithm. CoSaMP and SP fill in csmp_t = 2k / k when unset.
RecoveryResult solve(const RegressionProblem& p, Algorithm algo, const BatchConfig& cfg);

double lasso_objective(const Matrix& x, const Vector& y, const Vector& theta, double lambda,
                       const Vector* weights = nullptr);

// Largest eigenvalue of X^T X by power iteration (50 steps, rel. tol 1e-10).
double gram_spectral_radius(const Matrix& x);

// t_1 = 1, t_{i+1} = (1 + sqrt(1 + 4 t_i^2)) / 2.
std::vector<double> fista_momentum_sequence(std::size_t count);

}  // namespace sparsekit

#endif  // SPARSEKIT_SOLVERS_BATCH_HPP
