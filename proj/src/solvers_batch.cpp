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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sparsekit/error.hpp"
#include "sparsekit/operators.hpp"

namespace sparsekit {

namespace {

using Index = std::vector<std::size_t>;

Index support_of(const Vector& v) {
  Index s;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0.0) s.push_back(static_cast<std::size_t>(i));
  return s;
}

RecoveryResult finish(const RegressionProblem& p, Vector estimate, std::size_t iterations,
                      std::vector<double> history, bool converged) {
  RecoveryResult r;
  r.residual_norm = (p.y() - p.X() * estimate).norm();
  r.support = support_of(estimate);
  r.estimate = std::move(estimate);
  r.iterations = iterations;
  r.objective_history = std::move(history);
  r.converged = converged;
  return r;
}

// Least squares restricted to the columns in `cols`, scattered back into a
// length-l vector.
Vector restricted_ls(const Matrix& x, const Vector& y, const Index& cols) {
  Matrix sub(x.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    sub.col(static_cast<Eigen::Index>(j)) = x.col(static_cast<Eigen::Index>(cols[j]));
  Eigen::ColPivHouseholderQR<Matrix> qr(sub);
  qr.setThreshold(1e-10);
  if (qr.rank() < sub.cols()) {
    std::ostringstream msg;
    msg << "restricted least squares is rank deficient (rank " << qr.rank() << " for "
        << sub.cols() << " active columns)";
    fail(ErrorCode::Singular, msg.str());
  }
  const Vector z = qr.solve(y);
  Vector out = Vector::Zero(x.cols());
  for (std::size_t j = 0; j < cols.size(); ++j)
    out(static_cast<Eigen::Index>(cols[j])) = z(static_cast<Eigen::Index>(j));
  return out;
}

Index sorted_union(Index a, const Index& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::size_t require_k(const RegressionProblem& p, const BatchConfig& cfg, const char* who) {
  if (!cfg.sparsity_k)
    fail(ErrorCode::InvalidArgument, std::string(who) + " needs the sparsity level k");
  require(*cfg.sparsity_k <= p.matrix.cols(), ErrorCode::InvalidArgument,
          "sparsity level exceeds the number of columns");
  return *cfg.sparsity_k;
}

Vector prune(const Vector& v, std::size_t k) { return apply_threshold(rule::TopK{k}, v); }

double shrinkage_step(const RegressionProblem& p, const BatchConfig& cfg) {
  const double lmax = gram_spectral_radius(p.X());
  if (cfg.step_mu <= 0.0) return lmax > 0 ? 0.99 / lmax : 1.0;
  if (lmax > 0 && cfg.step_mu >= 1.0 / lmax) {
    std::ostringstream msg;
    msg << "step size " << cfg.step_mu << " must lie in (0, 1/lambda_max(X^T X)) = (0, "
        << 1.0 / lmax << ")";
    fail(ErrorCode::InvalidArgument, msg.str());
  }
  return cfg.step_mu;
}

void check_weights(const RegressionProblem& p, const Vector* w) {
  if (!w) return;
  require(static_cast<std::size_t>(w->size()) == p.matrix.cols(), ErrorCode::DimensionMismatch,
          "weight vector length must equal matrix columns");
  require((w->array() >= 0).all(), ErrorCode::InvalidArgument, "weights must be nonnegative");
}

Vector initial_point(const RegressionProblem& p, const Vector* start) {
  if (!start) return Vector::Zero(p.X().cols());
  require(start->size() == p.X().cols(), ErrorCode::DimensionMismatch,
          "start vector length must equal matrix columns");
  return *start;
}

Vector shrink(const Vector& v, double threshold, const Vector* w) {
  Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out(i) = soft_threshold(v(i), threshold * (w ? (*w)(i) : 1.0));
  return out;
}

// One step of IHT with the step chosen on the current support (the top-k
// gradient entries when theta is zero), shrunk while the support would change
// without enough decrease.
Vector adaptive_iht_step(const Matrix& x, const Vector& theta, const Vector& g, std::size_t k) {
  constexpr double c = 0.01;
  constexpr double kappa = 2.0;
  Index support = support_of(theta);
  if (support.empty()) {
    support = top_k_indices(g, k);
    std::sort(support.begin(), support.end());
  }
  Vector g_s = Vector::Zero(g.size());
  for (std::size_t j : support) g_s(static_cast<Eigen::Index>(j)) = g(static_cast<Eigen::Index>(j));
  const double den = (x * g_s).squaredNorm();
  if (!(den > 0)) return theta;
  double mu = g_s.squaredNorm() / den;
  for (int guard = 0; guard < 60; ++guard) {
    Vector next = prune(theta + mu * g, k);
    if (support_of(next) == support) return next;
    const Vector d = next - theta;
    const double xd = (x * d).squaredNorm();
    if (xd <= 0 || mu <= (1.0 - c) * d.squaredNorm() / xd) return next;
    mu /= kappa * (1.0 - c);
  }
  return prune(theta + mu * g, k);
}

bool objective_settled(double previous, double current, double tol) {
  const double scale = std::max(std::abs(previous), std::numeric_limits<double>::min());
  return std::abs(previous - current) <= tol * scale;
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Omp: return "omp";
    case Algorithm::CoSaMP: return "cosamp";
    case Algorithm::SubspacePursuit: return "sp";
    case Algorithm::Ista: return "ista";
    case Algorithm::Fista: return "fista";
    case Algorithm::Iht: return "iht";
    case Algorithm::CoordinateDescent: return "cd";
    case Algorithm::Tst: return "tst";
    case Algorithm::ReweightedL1: return "reweighted";
  }
  return "omp";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (auto a : {Algorithm::Omp, Algorithm::CoSaMP, Algorithm::SubspacePursuit, Algorithm::Ista,
                 Algorithm::Fista, Algorithm::Iht, Algorithm::CoordinateDescent, Algorithm::Tst,
                 Algorithm::ReweightedL1})
    if (name == to_string(a)) return a;
  if (name == "ist") return Algorithm::Ista;
  if (name == "csmp") return Algorithm::CoSaMP;
  return std::nullopt;
}

bool is_greedy(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Omp:
    case Algorithm::CoSaMP:
    case Algorithm::SubspacePursuit:
    case Algorithm::Iht:
    case Algorithm::Tst:
      return true;
    default:
      return false;
  }
}

double lasso_objective(const Matrix& x, const Vector& y, const Vector& theta, double lambda,
                       const Vector* weights) {
  const double fit = 0.5 * (y - x * theta).squaredNorm();
  const double pen = weights ? weighted_l1_norm(*weights, theta) : theta.lpNorm<1>();
  return fit + lambda * pen;
}

double gram_spectral_radius(const Matrix& x) {
  if (x.size() == 0) return 0.0;
  // X X^T and X^T X share their nonzero spectrum; use the smaller one.
  const Matrix g = x.rows() <= x.cols() ? Matrix(x * x.transpose()) : Matrix(x.transpose() * x);
  Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
  return std::max(es.eigenvalues().maxCoeff(), 0.0);
}

std::vector<double> fista_momentum_sequence(std::size_t count) {
  std::vector<double> t;
  t.reserve(count);
  double ti = 1.0;
  for (std::size_t i = 0; i < count; ++i) {
    t.push_back(ti);
    ti = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * ti * ti));
  }
  return t;
}

RecoveryResult omp(const RegressionProblem& p, const BatchConfig& cfg) {
  require(cfg.tol >= 0, ErrorCode::InvalidArgument, "tolerance must be nonnegative");
  const Matrix& x = p.X();
  const Vector& y = p.y();
  const Vector col_norms = x.colwise().norm().transpose();
  const std::size_t max_steps =
      std::min({cfg.max_iters, p.matrix.rows(), p.matrix.cols()});

  Vector theta = Vector::Zero(x.cols());
  Vector e = y;
  Index active;
  std::vector<bool> used(static_cast<std::size_t>(x.cols()), false);
  std::vector<double> history{e.norm()};
  bool converged = e.norm() <= cfg.tol;
  while (!converged && active.size() < max_steps) {
    const Vector corr = x.transpose() * e;
    std::size_t best = 0;
    double best_score = -1.0;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (used[static_cast<std::size_t>(j)] || col_norms(j) == 0.0) continue;
      const double score = std::abs(corr(j)) / col_norms(j);
      if (score > best_score) {
        best_score = score;
        best = static_cast<std::size_t>(j);
      }
    }
    if (best_score <= 0.0) break;
    used[best] = true;
    active.push_back(best);
    theta = restricted_ls(x, y, active);
    e = y - x * theta;
    history.push_back(e.norm());
    converged = e.norm() <= cfg.tol;
  }
  return finish(p, std::move(theta), active.size(), std::move(history), converged);
}

RecoveryResult csmp(const RegressionProblem& p, const BatchConfig& cfg) {
  const std::size_t k = require_k(p, cfg, "csmp");
  const std::size_t t = cfg.csmp_t.value_or(2 * k);
  require(t >= 1 && t <= p.matrix.cols(), ErrorCode::InvalidArgument,
          "csmp candidate count t must lie in [1, l]");
  const Matrix& x = p.X();
  const Vector& y = p.y();

  Vector theta = Vector::Zero(x.cols());
  Vector e = y;
  std::vector<double> history{e.norm()};
  bool converged = e.norm() <= cfg.tol;
  std::size_t iters = 0;
  std::size_t unchanged = 0;
  Index previous_support = support_of(theta);
  while (!converged && iters < cfg.max_iters) {
    ++iters;
    const Vector corr = x.transpose() * e;
    const Index candidates = sorted_union(support_of(theta), top_k_indices(corr, t));
    const Vector next = prune(restricted_ls(x, y, candidates), k);
    const Vector next_e = y - x * next;
    const double old_res = e.norm();
    const double new_res = next_e.norm();
    const Index support = support_of(next);
    unchanged = (support == previous_support) ? unchanged + 1 : 0;
    previous_support = support;
    theta = next;
    e = next_e;
    history.push_back(new_res);
    converged = new_res <= cfg.tol;
    // Three identical supports in a row without progress: a fixed point or
    // a cycle that will not improve.
    if (!converged && unchanged >= 2 && new_res >= old_res) {
      converged = true;
      break;
    }
  }
  return finish(p, std::move(theta), iters, std::move(history), converged);
}

RecoveryResult ista(const RegressionProblem& p, const BatchConfig& cfg, const Vector* weights,
                    const Vector* start) {
  require(cfg.lambda >= 0, ErrorCode::InvalidArgument, "lambda must be nonnegative");
  check_weights(p, weights);
  const double mu = shrinkage_step(p, cfg);
  const Matrix& x = p.X();
  const Vector& y = p.y();

  Vector theta = initial_point(p, start);
  std::vector<double> history{lasso_objective(x, y, theta, cfg.lambda, weights)};
  bool converged = false;
  std::size_t iters = 0;
  while (iters < cfg.max_iters) {
    ++iters;
    const Vector e = y - x * theta;
    theta = shrink(theta + mu * (x.transpose() * e), cfg.lambda * mu, weights);
    history.push_back(lasso_objective(x, y, theta, cfg.lambda, weights));
    if (objective_settled(history[history.size() - 2], history.back(), cfg.tol)) {
      converged = true;
      break;
    }
  }
  return finish(p, std::move(theta), iters, std::move(history), converged);
}

RecoveryResult fista(const RegressionProblem& p, const BatchConfig& cfg, const Vector* weights,
                     const Vector* start) {
  require(cfg.lambda >= 0, ErrorCode::InvalidArgument, "lambda must be nonnegative");
  check_weights(p, weights);
  const double mu = shrinkage_step(p, cfg);
  const Matrix& x = p.X();
  const Vector& y = p.y();

  Vector theta = initial_point(p, start);
  Vector z = theta;
  double t = 1.0;
  std::vector<double> history{lasso_objective(x, y, theta, cfg.lambda, weights)};
  bool converged = false;
  std::size_t iters = 0;
  while (iters < cfg.max_iters) {
    ++iters;
    const Vector grad_step = z + mu * (x.transpose() * (y - x * z));
    const Vector next = shrink(grad_step, cfg.lambda * mu, weights);
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    z = next + ((t - 1.0) / t_next) * (next - theta);
    theta = next;
    t = t_next;
    history.push_back(lasso_objective(x, y, theta, cfg.lambda, weights));
    if (objective_settled(history[history.size() - 2], history.back(), cfg.tol)) {
      converged = true;
      break;
    }
  }
  return finish(p, std::move(theta), iters, std::move(history), converged);
}

RecoveryResult iht(const RegressionProblem& p, const BatchConfig& cfg) {
  const std::size_t k = require_k(p, cfg, "iht");
  const double mu = cfg.step_mu > 0 ? cfg.step_mu : 1.0;
  const Matrix& x = p.X();
  const Vector& y = p.y();

  Vector theta = Vector::Zero(x.cols());
  std::vector<double> history{y.norm()};
  if (k == 0) return finish(p, std::move(theta), 0, std::move(history), true);
  bool converged = history.back() <= cfg.tol;
  std::size_t iters = 0;
  constexpr std::size_t window = 10;
  while (!converged && iters < cfg.max_iters) {
    ++iters;
    const Vector g = x.transpose() * (y - x * theta);
    theta = cfg.adaptive_step ? adaptive_iht_step(x, theta, g, k) : prune(theta + mu * g, k);
    const double res = (y - x * theta).norm();
    history.push_back(res);
    if (!std::isfinite(res)) break;
    if (res <= cfg.tol) {
      converged = true;
    } else if (iters >= window) {
      const double past = history[iters - window];
      converged = std::abs(past - res) <= cfg.tol * std::max(past, 1e-300);
    }
  }
  return finish(p, std::move(theta), iters, std::move(history), converged);
}

RecoveryResult coordinate_descent(const RegressionProblem& p, const BatchConfig& cfg,
                                  const Vector* weights, const Vector* start) {
  require(cfg.lambda >= 0, ErrorCode::InvalidArgument, "lambda must be nonnegative");
  check_weights(p, weights);
  const Matrix& x = p.X();
  const Vector& y = p.y();
  const Vector sq_norms = x.colwise().squaredNorm().transpose();
  if ((sq_norms.array() == 0.0).any())
    fail(ErrorCode::Degenerate, "coordinate descent needs nonzero columns");

  Vector theta = initial_point(p, start);
  Vector e = y - x * theta;
  std::vector<double> history{lasso_objective(x, y, theta, cfg.lambda, weights)};
  bool converged = false;
  std::size_t sweeps = 0;
  while (sweeps < cfg.max_iters) {
    ++sweeps;
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double old = theta(j);
      const double wj = weights ? (*weights)(j) : 1.0;
      const double updated =
          soft_threshold(old + x.col(j).dot(e) / sq_norms(j), cfg.lambda * wj / sq_norms(j));
      if (updated != old) {
        e -= (updated - old) * x.col(j);
        theta(j) = updated;
      }
    }
    history.push_back(lasso_objective(x, y, theta, cfg.lambda, weights));
    if (objective_settled(history[history.size() - 2], history.back(), cfg.tol)) {
      converged = true;
      break;
    }
  }
  return finish(p, std::move(theta), sweeps, std::move(history), converged);
}

RecoveryResult tst(const RegressionProblem& p, const BatchConfig& cfg) {
  const std::size_t k = require_k(p, cfg, "tst");
  const std::size_t t = cfg.csmp_t.value_or(k);
  require(t <= p.matrix.cols(), ErrorCode::InvalidArgument,
          "tst stage-1 count exceeds the number of columns");
  const double mu = cfg.step_mu > 0 ? cfg.step_mu : 1.0;
  const Matrix& x = p.X();
  const Vector& y = p.y();

  Vector theta = Vector::Zero(x.cols());
  Vector e = y;
  std::vector<double> history{e.norm()};
  if (k == 0) return finish(p, std::move(theta), 0, std::move(history), true);
  bool converged = e.norm() <= cfg.tol;
  std::size_t iters = 0;
  Index previous_support = support_of(theta);
  while (!converged && iters < cfg.max_iters) {
    ++iters;
    Index significant = top_k_indices(theta + mu * (x.transpose() * e), t);
    std::sort(significant.begin(), significant.end());
    theta = prune(restricted_ls(x, y, significant), k);
    e = y - x * theta;
    history.push_back(e.norm());
    const Index support = support_of(theta);
    converged = e.norm() <= cfg.tol || support == previous_support;
    previous_support = support;
  }
  return finish(p, std::move(theta), iters, std::move(history), converged);
}

std::vector<RecoveryResult> reweighted_l1_rounds(const RegressionProblem& p,
                                                 const BatchConfig& cfg, InnerSolver inner) {
  require(cfg.reweight_epsilon > 0, ErrorCode::InvalidArgument,
          "reweighting epsilon must be positive");
  require(cfg.reweight_rounds >= 1, ErrorCode::InvalidArgument,
          "at least one reweighting round is needed");
  const Matrix& x = p.X();
  const Vector& y = p.y();
  const Vector corr = x.transpose() * y;
  const double corr_max = corr.lpNorm<Eigen::Infinity>();
  // The equality-constrained weighted l1 problem is approached through
  // weighted LASSO problems with lambda decreasing to the target.
  const double target = cfg.lambda > 0 ? cfg.lambda : 1e-6 * corr_max;

  auto run = [&](const BatchConfig& c, const Vector& w, const Vector& start) {
    switch (inner) {
      case InnerSolver::Ista: return ista(p, c, &w, &start);
      case InnerSolver::Fista: return fista(p, c, &w, &start);
      case InnerSolver::CoordinateDescent: break;
    }
    return coordinate_descent(p, c, &w, &start);
  };

  std::vector<RecoveryResult> rounds;
  Vector w = Vector::Ones(x.cols());
  Vector theta = Vector::Zero(x.cols());
  for (std::size_t round = 0; round < cfg.reweight_rounds; ++round) {
    // Largest lambda for which theta = 0 is optimal under weights w.
    double lambda0 = 0.0;
    for (Eigen::Index j = 0; j < corr.size(); ++j)
      lambda0 = std::max(lambda0, std::abs(corr(j)) / w(j));
    double lambda = std::max(0.5 * lambda0, target);
    BatchConfig stage = cfg;
    std::size_t total_iters = 0;
    RecoveryResult r;
    while (true) {
      stage.lambda = lambda;
      r = run(stage, w, theta);
      total_iters += r.iterations;
      theta = r.estimate;
      if (lambda <= target) break;
      lambda = std::max(0.1 * lambda, target);
    }
    r.iterations = total_iters;
    rounds.push_back(r);
    w = (theta.array().abs() + cfg.reweight_epsilon).inverse().matrix();
  }
  return rounds;
}

RecoveryResult reweighted_l1(const RegressionProblem& p, const BatchConfig& cfg,
                             InnerSolver inner) {
  auto rounds = reweighted_l1_rounds(p, cfg, inner);
  RecoveryResult last = std::move(rounds.back());
  std::size_t total = 0;
  std::vector<double> history;
  for (const auto& r : rounds) {
    total += r.iterations;
    history.push_back(r.objective_history.empty() ? 0.0 : r.objective_history.back());
  }
  last.iterations = total;
  last.objective_history = std::move(history);
  return last;
}

RecoveryResult solve(const RegressionProblem& p, Algorithm algo, const BatchConfig& cfg) {
  switch (algo) {
    case Algorithm::Omp: return omp(p, cfg);
    case Algorithm::CoSaMP: {
      BatchConfig c = cfg;
      if (!c.csmp_t && c.sparsity_k) c.csmp_t = 2 * *c.sparsity_k;
      return csmp(p, c);
    }
    case Algorithm::SubspacePursuit: {
      BatchConfig c = cfg;
      if (!c.csmp_t && c.sparsity_k) c.csmp_t = *c.sparsity_k;
      return csmp(p, c);
    }
    case Algorithm::Ista: return ista(p, cfg);
    case Algorithm::Fista: return fista(p, cfg);
    case Algorithm::Iht: return iht(p, cfg);
    case Algorithm::CoordinateDescent: return coordinate_descent(p, cfg);
    case Algorithm::Tst: return tst(p, cfg);
    case Algorithm::ReweightedL1: return reweighted_l1(p, cfg);
  }
  fail(ErrorCode::InvalidArgument, "unknown algorithm");
}

}  // namespace sparsekit
