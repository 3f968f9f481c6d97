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

#include "sparsekit/solvers_batch.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "sparsekit/operators.hpp"
#include "test_support.hpp"

namespace sk = sparsekit;
using sk::BatchConfig;
using sk::ErrorCode;
using sk::Matrix;
using sk::RecoveryResult;
using sk::RegressionProblem;
using sk::SensingMatrix;
using sk::Vector;
using sk::testing::expect_error;

namespace {

RegressionProblem problem(const Matrix& x, const Vector& y,
                          std::optional<Vector> truth = std::nullopt) {
  return RegressionProblem(SensingMatrix::from_entries(x), y, std::move(truth));
}

Vector sparse_vector(std::size_t l, std::size_t k, std::uint64_t seed) {
  sk::CounterRng rng(seed);
  Vector v = Vector::Zero(l);
  std::size_t placed = 0;
  while (placed < k) {
    const auto i = static_cast<Eigen::Index>(rng.below(l));
    if (v(i) != 0.0) continue;
    double z = 0;
    while (z == 0) z = rng.normal();
    v(i) = z;
    ++placed;
  }
  return v;
}

// Gaussian normalized N x l matrix with a k-sparse Gaussian target.
RegressionProblem toy(std::size_t n, std::size_t l, std::size_t k, std::uint64_t seed,
                      double sigma = 0.0) {
  const auto m = SensingMatrix::generate(sk::Ensemble::Gaussian, n, l, seed, true);
  const Vector theta = sparse_vector(l, k, seed ^ 0xABCDEFull);
  Vector y = m.entries() * theta;
  if (sigma > 0) y += sk::testing::random_vector(n, seed ^ 0x1234ull, sigma);
  return RegressionProblem(m, y, theta, sigma);
}

double rel_err(const Vector& est, const Vector& truth) {
  return (est - truth).norm() / truth.norm();
}

void expect_consistent(const RegressionProblem& p, const RecoveryResult& r) {
  const double direct = (p.y() - p.X() * r.estimate).norm();
  if (std::isfinite(direct))
    EXPECT_NEAR(r.residual_norm, direct, 1e-12);
  else
    EXPECT_FALSE(std::isfinite(r.residual_norm));
  std::vector<std::size_t> nz;
  for (Eigen::Index i = 0; i < r.estimate.size(); ++i)
    if (r.estimate(i) != 0.0) nz.push_back(static_cast<std::size_t>(i));
  EXPECT_EQ(r.support, nz);
}

std::size_t nonzeros(const Vector& v) { return static_cast<std::size_t>((v.array() != 0).count()); }

BatchConfig tight(double lambda) {
  BatchConfig c;
  c.lambda = lambda;
  c.tol = 1e-14;
  c.max_iters = 200000;
  return c;
}

}  // namespace

TEST(Omp, SingleAtom) {
  const Matrix x = sk::testing::random_matrix(8, 12, 3);
  const Vector y = 2.0 * x.col(2);
  BatchConfig c;
  c.max_iters = 8;
  const auto r = sk::omp(problem(x, y), c);
  EXPECT_EQ(r.support, (std::vector<std::size_t>{2}));
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_NEAR(r.estimate(2), 2.0, 1e-12);
  EXPECT_LE(r.residual_norm, 1e-12);
}

TEST(Omp, ZeroMeasurements) {
  const Matrix x = sk::testing::random_matrix(8, 12, 3);
  const auto r = sk::omp(problem(x, Vector::Zero(8)), BatchConfig{});
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(r.estimate.norm(), 0.0);
  EXPECT_TRUE(r.converged);
}

TEST(Omp, SupportGrowsOnePerIteration) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto p = toy(20, 50, 4, seed);
    BatchConfig c;
    c.max_iters = 20;
    const auto r = sk::omp(p, c);
    expect_consistent(p, r);
    EXPECT_EQ(r.support.size(), r.iterations);
    for (std::size_t i = 1; i < r.objective_history.size(); ++i)
      EXPECT_LT(r.objective_history[i], r.objective_history[i - 1] + 1e-12);
  }
}

// Orthonormal pair [Q, Q H / sqrt(N)] has coherence exactly 1/sqrt(N).
TEST(Omp, CoherenceConditionGivesExactRecoveryInKSteps) {
  const std::size_t n = 16;
  Matrix h = Matrix::Ones(1, 1);
  while (h.rows() < Eigen::Index(n)) {
    Matrix next(2 * h.rows(), 2 * h.cols());
    next << h, h, h, -h;
    h = next;
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Matrix q = sk::testing::random_orthonormal(n, seed);
    Matrix x(n, 2 * n);
    x << q, q * h / std::sqrt(double(n));
    const double mu = sk::mutual_coherence(x);
    ASSERT_NEAR(mu, 0.25, 1e-12);
    const std::size_t k = 1 + seed % 2;  // 1 or 2 < (1 + 1/mu) / 2 = 2.5
    const Vector theta = sparse_vector(2 * n, k, seed);
    BatchConfig c;
    c.max_iters = n;
    c.tol = 1e-10;
    const auto r = sk::omp(problem(x, x * theta), c);
    EXPECT_EQ(r.iterations, k) << "seed " << seed;
    EXPECT_LE(rel_err(r.estimate, theta), 1e-10) << "seed " << seed;
  }
}

TEST(Csmp, ToyNoiselessRecovery) {
  int exact = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto p = toy(20, 50, 5, seed);
    BatchConfig c;
    c.sparsity_k = 5;
    const auto r = sk::solve(p, sk::Algorithm::CoSaMP, c);
    expect_consistent(p, r);
    EXPECT_EQ(nonzeros(r.estimate), 5u);
    exact += rel_err(r.estimate, *p.truth) <= 1e-6;
  }
  EXPECT_GE(exact, 24);
}

TEST(Csmp, ToyNoisySupportMostlyRecovered) {
  const double sigma = std::sqrt(0.025);
  int matched = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto p = toy(20, 50, 5, seed, sigma);
    BatchConfig c;
    c.sparsity_k = 5;
    const auto r = sk::solve(p, sk::Algorithm::CoSaMP, c);
    std::set<std::size_t> truth;
    for (Eigen::Index i = 0; i < 50; ++i)
      if ((*p.truth)(i) != 0.0) truth.insert(static_cast<std::size_t>(i));
    matched += std::set<std::size_t>(r.support.begin(), r.support.end()) == truth;
    EXPECT_GT(rel_err(r.estimate, *p.truth), 0.0);
    EXPECT_LE(r.residual_norm, 3.0 * sigma * std::sqrt(20.0));
  }
  EXPECT_GT(matched, 15);
}

TEST(Csmp, FullSupportIsLeastSquares) {
  const Matrix x = sk::testing::random_matrix(6, 6, 2);
  const Vector y = sk::testing::random_vector(6, 3);
  BatchConfig c;
  c.sparsity_k = 6;
  c.csmp_t = 6;
  const auto r = sk::csmp(problem(x, y), c);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_LE((r.estimate - x.partialPivLu().solve(y)).norm(), 1e-10);
}

TEST(Csmp, SubspacePursuitDefaultsTToK) {
  const auto p = toy(20, 50, 3, 4);
  BatchConfig c;
  c.sparsity_k = 3;
  const auto r = sk::solve(p, sk::Algorithm::SubspacePursuit, c);
  EXPECT_EQ(nonzeros(r.estimate), 3u);
  EXPECT_LE(rel_err(r.estimate, *p.truth), 1e-6);
}

TEST(Csmp, NeedsK) {
  const auto p = toy(20, 50, 3, 4);
  expect_error(ErrorCode::InvalidArgument, [&] { sk::csmp(p, BatchConfig{}); });
}

TEST(Ista, OrthonormalLimitIsSoftThreshold) {
  const Matrix q = sk::testing::random_orthonormal(8, 5);
  const Vector y = sk::testing::random_vector(8, 6);
  for (double lambda : {0.0, 0.1, 0.5, 1.0}) {
    const auto r = sk::ista(problem(q, y), tight(lambda));
    const Vector oracle = sk::apply_threshold(sk::rule::Soft{lambda}, Vector(q.transpose() * y));
    EXPECT_LE((r.estimate - oracle).cwiseAbs().maxCoeff(), 1e-9) << "lambda " << lambda;
  }
}

TEST(Ista, StepOutOfRange) {
  const Matrix q = sk::testing::random_orthonormal(4, 1);
  BatchConfig c;
  c.step_mu = 1.0;
  expect_error(ErrorCode::InvalidArgument,
               [&] { sk::ista(problem(q, Vector::Ones(4)), c); });
}

TEST(Ista, ObjectiveNonincreasing) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = toy(40, 100, 5, seed);
    const double lambda = 0.1 * (p.X().transpose() * p.y()).lpNorm<Eigen::Infinity>();
    const auto r = sk::ista(p, tight(lambda));
    expect_consistent(p, r);
    for (std::size_t i = 1; i < r.objective_history.size(); ++i)
      ASSERT_LE(r.objective_history[i], r.objective_history[i - 1] + 1e-12);
  }
}

TEST(Fista, MomentumSequence) {
  const auto t = sk::fista_momentum_sequence(3);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], 1.0);
  EXPECT_NEAR(t[1], (1 + std::sqrt(5.0)) / 2, 1e-15);
  EXPECT_NEAR(t[2], (1 + std::sqrt(1 + 4 * t[1] * t[1])) / 2, 1e-15);
  EXPECT_NEAR(t[2], 2.1935, 1e-4);
}

TEST(Fista, FirstIterateMatchesIsta) {
  const auto p = toy(40, 100, 5, 3);
  BatchConfig c;
  c.lambda = 0.05;
  c.max_iters = 1;
  EXPECT_EQ(sk::ista(p, c).estimate, sk::fista(p, c).estimate);
}

TEST(ConvexSolvers, AgreeOnStandardInstances) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto p = toy(40, 100, 5, seed);
    const double lambda = 0.1 * (p.X().transpose() * p.y()).lpNorm<Eigen::Infinity>();
    const auto a = sk::ista(p, tight(lambda));
    const auto f = sk::fista(p, tight(lambda));
    const auto d = sk::coordinate_descent(p, tight(lambda));
    const double oa = sk::lasso_objective(p.X(), p.y(), a.estimate, lambda);
    const double of = sk::lasso_objective(p.X(), p.y(), f.estimate, lambda);
    const double od = sk::lasso_objective(p.X(), p.y(), d.estimate, lambda);
    EXPECT_NEAR(oa, od, 1e-6);
    EXPECT_NEAR(of, od, 1e-6);
    EXPECT_LE((a.estimate - d.estimate).norm(), 1e-5);
  }
}

TEST(CoordinateDescent, OrthonormalOneSweep) {
  const Matrix q = sk::testing::random_orthonormal(8, 7);
  const Vector y = sk::testing::random_vector(8, 8);
  BatchConfig c;
  c.lambda = 0.3;
  c.max_iters = 1;
  const auto r = sk::coordinate_descent(problem(q, y), c);
  const Vector oracle = sk::apply_threshold(sk::rule::Soft{0.3}, Vector(q.transpose() * y));
  EXPECT_LE((r.estimate - oracle).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CoordinateDescent, ZeroLambdaSquareIsLs) {
  Matrix x = sk::testing::random_matrix(5, 5, 9);
  x += 3.0 * Matrix::Identity(5, 5);
  const Vector y = sk::testing::random_vector(5, 10);
  const auto r = sk::coordinate_descent(problem(x, y), tight(0.0));
  EXPECT_LE((r.estimate - x.partialPivLu().solve(y)).norm(), 1e-8);
}

TEST(CoordinateDescent, ZeroColumn) {
  Matrix x = sk::testing::random_matrix(4, 6, 1);
  x.col(5).setZero();
  expect_error(ErrorCode::Degenerate,
               [&] { sk::coordinate_descent(problem(x, Vector::Ones(4)), BatchConfig{}); });
}

TEST(Iht, OrthonormalOneIteration) {
  const Matrix q = sk::testing::random_orthonormal(10, 2);
  const Vector theta = sparse_vector(10, 3, 5);
  BatchConfig c;
  c.sparsity_k = 3;
  c.step_mu = 1.0;
  c.max_iters = 1;
  const auto r = sk::iht(problem(q, q * theta), c);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_LE((r.estimate - theta).norm(), 1e-12);
}

TEST(Iht, ZeroK) {
  const auto p = toy(20, 50, 3, 1);
  BatchConfig c;
  c.sparsity_k = 0;
  EXPECT_EQ(sk::iht(p, c).estimate.norm(), 0.0);
}

TEST(Iht, AlwaysKSparse) {
  for (bool adaptive : {false, true})
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto p = toy(20, 50, 5, seed);
      BatchConfig c;
      c.sparsity_k = 5;
      c.adaptive_step = adaptive;
      const auto r = sk::iht(p, c);
      expect_consistent(p, r);
      EXPECT_LE(nonzeros(r.estimate), 5u);
    }
}

// Stated target: exact recovery on at least 80 of 100 seeds with mu = 1.
TEST(Iht, ToyNoiselessRecoveryRate) {
  int exact = 0, exact_adaptive = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto p = toy(20, 50, 5, seed);
    BatchConfig c;
    c.sparsity_k = 5;
    exact += rel_err(sk::iht(p, c).estimate, *p.truth) <= 1e-6;
    c.adaptive_step = true;
    exact_adaptive += rel_err(sk::iht(p, c).estimate, *p.truth) <= 1e-6;
  }
  RecordProperty("adaptive_step_exact", exact_adaptive);
  std::printf("iht exact: fixed step %d/100, adaptive step %d/100\n", exact, exact_adaptive);
  EXPECT_GE(exact, 80);
}

TEST(Tst, OrthonormalOneIteration) {
  const Matrix q = sk::testing::random_orthonormal(10, 3);
  const Vector theta = sparse_vector(10, 3, 6);
  BatchConfig c;
  c.sparsity_k = 3;
  c.max_iters = 1;
  const auto r = sk::tst(problem(q, q * theta), c);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_LE((r.estimate - theta).norm(), 1e-12);
}

// From zero both pick the top t of X^T y, so the stage-1 statistics only
// part ways at the second iteration; search small instances for a split.
TEST(Tst, SecondSupportDiffersFromCsmpSomewhere) {
  bool found = false;
  for (std::uint64_t seed = 1; seed <= 200 && !found; ++seed) {
    const auto p = toy(6, 12, 2, seed);
    BatchConfig c;
    c.sparsity_k = 2;
    c.csmp_t = 2;
    c.max_iters = 2;
    found = sk::tst(p, c).support != sk::csmp(p, c).support;
  }
  EXPECT_TRUE(found);
}

TEST(Tst, ToyNoiselessMajority) {
  int exact = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto p = toy(20, 50, 5, seed);
    BatchConfig c;
    c.sparsity_k = 5;
    const auto r = sk::tst(p, c);
    expect_consistent(p, r);
    EXPECT_LE(nonzeros(r.estimate), 5u);
    exact += rel_err(r.estimate, *p.truth) <= 1e-6;
  }
  EXPECT_GT(exact, 25);
}

TEST(Reweighted, TwoVariableScenario) {
  Matrix x(1, 2);
  x << 2, 1;
  const auto p = problem(x, Vector::Ones(1));
  BatchConfig c;
  c.reweight_rounds = 2;
  const auto rounds = sk::reweighted_l1_rounds(p, c, sk::InnerSolver::CoordinateDescent);
  ASSERT_EQ(rounds.size(), 2u);
  EXPECT_LE((rounds[0].estimate - Eigen::Vector2d(0.5, 0)).norm(), 1e-4);
  EXPECT_LE((rounds[1].estimate - Eigen::Vector2d(0, 1)).norm(), 1e-4);
}

TEST(Reweighted, WeightAboveTwoSelectsSecondCoordinate) {
  Matrix x(1, 2);
  x << 2, 1;
  const Vector w = Eigen::Vector2d(4, 1);
  // Optimality: b = 1 - lambda, and |2 (y - 2a - b)| = 2 lambda <= 4 lambda keeps a = 0.
  const auto r = sk::coordinate_descent(problem(x, Vector::Ones(1)), tight(0.01), &w);
  EXPECT_LE((r.estimate - Eigen::Vector2d(0, 0.99)).norm(), 1e-8);
}

TEST(Reweighted, CorrectSparseSolutionIsFixedPoint) {
  const Matrix q = sk::testing::random_orthonormal(6, 4);
  const Vector theta = sparse_vector(6, 2, 3);
  BatchConfig c;
  c.reweight_rounds = 3;
  c.tol = 1e-14;
  c.max_iters = 100000;
  const auto rounds = sk::reweighted_l1_rounds(problem(q, q * theta), c,
                                               sk::InnerSolver::CoordinateDescent);
  for (std::size_t i = 1; i < rounds.size(); ++i)
    EXPECT_LE((rounds[i].estimate - rounds[i - 1].estimate).norm(), 1e-5);
  EXPECT_LE((rounds.back().estimate - theta).norm(), 1e-4);
}

TEST(Reweighted, NeverWorseThanFirstRound) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto p = toy(10, 30, 3, seed);
    BatchConfig c;
    c.reweight_rounds = 4;
    const auto rounds = sk::reweighted_l1_rounds(p, c, sk::InnerSolver::CoordinateDescent);
    const double first = (rounds.front().estimate - *p.truth).norm();
    const double last = (rounds.back().estimate - *p.truth).norm();
    EXPECT_LE(last, first + 1e-4) << "seed " << seed;
  }
}

TEST(Solvers, ResidualAndDeterminism) {
  const auto p = toy(20, 50, 4, 17);
  BatchConfig c;
  c.sparsity_k = 4;
  c.lambda = 0.01;
  for (auto a : {sk::Algorithm::Omp, sk::Algorithm::CoSaMP, sk::Algorithm::SubspacePursuit,
                 sk::Algorithm::Ista, sk::Algorithm::Fista, sk::Algorithm::Iht,
                 sk::Algorithm::CoordinateDescent, sk::Algorithm::Tst,
                 sk::Algorithm::ReweightedL1}) {
    const auto r1 = sk::solve(p, a, c);
    const auto r2 = sk::solve(p, a, c);
    expect_consistent(p, r1);
    EXPECT_EQ(r1.estimate, r2.estimate) << sk::to_string(a);
    EXPECT_EQ(r1.iterations, r2.iterations) << sk::to_string(a);
  }
}

TEST(Solvers, NamesRoundTrip) {
  for (auto a : {sk::Algorithm::Omp, sk::Algorithm::CoSaMP, sk::Algorithm::SubspacePursuit,
                 sk::Algorithm::Ista, sk::Algorithm::Fista, sk::Algorithm::Iht,
                 sk::Algorithm::CoordinateDescent, sk::Algorithm::Tst,
                 sk::Algorithm::ReweightedL1})
    EXPECT_EQ(sk::parse_algorithm(sk::to_string(a)), a);
  EXPECT_FALSE(sk::parse_algorithm("lars").has_value());
}

TEST(GramRadius, MatchesEigenSolver) {
  const Matrix x = sk::testing::random_matrix(10, 30, 5);
  Eigen::SelfAdjointEigenSolver<Matrix> es(x * x.transpose());
  EXPECT_NEAR(sk::gram_spectral_radius(x), es.eigenvalues().maxCoeff(),
              1e-8 * es.eigenvalues().maxCoeff());
}
