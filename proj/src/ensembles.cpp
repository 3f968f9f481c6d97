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

#include "sparsekit/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sparsekit/error.hpp"
#include "sparsekit/rng.hpp"

namespace sparsekit {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

Matrix hadamard(std::size_t l) {
  Matrix h = Matrix::Ones(1, 1);
  while (static_cast<std::size_t>(h.rows()) < l) {
    const auto s = h.rows();
    Matrix next(2 * s, 2 * s);
    next << h, h, h, -h;
    h = std::move(next);
  }
  return h / std::sqrt(static_cast<double>(l));
}

Matrix gaussian_orthonormal(std::size_t l, CounterRng& rng) {
  Matrix g(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(l, l);
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double c = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(std::llround(c));
}

}  // namespace

std::string_view to_string(Ensemble e) noexcept {
  switch (e) {
    case Ensemble::Gaussian: return "gaussian";
    case Ensemble::Bernoulli: return "bernoulli";
    case Ensemble::Ternary: return "ternary";
    case Ensemble::UniformSphere: return "sphere";
    case Ensemble::PartialOrthonormal: return "partial-orthonormal";
    case Ensemble::Explicit: return "explicit";
  }
  return "explicit";
}

std::optional<Ensemble> parse_ensemble(std::string_view name) noexcept {
  for (auto e : {Ensemble::Gaussian, Ensemble::Bernoulli, Ensemble::Ternary,
                 Ensemble::UniformSphere, Ensemble::PartialOrthonormal, Ensemble::Explicit})
    if (name == to_string(e)) return e;
  if (name == "fourier" || name == "partial-fourier") return Ensemble::PartialOrthonormal;
  return std::nullopt;
}

void normalize_columns(Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double norm = m.col(j).norm();
    if (norm == 0.0) fail(ErrorCode::Degenerate, "cannot normalize a zero column");
    m.col(j) /= norm;
  }
}

SensingMatrix SensingMatrix::generate(Ensemble ensemble, std::size_t n, std::size_t l,
                                      std::uint64_t seed, bool normalize) {
  require(n >= 1 && l >= 1, ErrorCode::InvalidArgument, "matrix dimensions must be positive");
  CounterRng rng(seed);
  Matrix x(n, l);
  const double dn = static_cast<double>(n);
  switch (ensemble) {
    case Ensemble::Gaussian:
    case Ensemble::UniformSphere: {
      const double scale = 1.0 / std::sqrt(dn);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < l; ++j) x(i, j) = scale * rng.normal();
      if (ensemble == Ensemble::UniformSphere) normalize = true;
      break;
    }
    case Ensemble::Bernoulli: {
      const double v = 1.0 / std::sqrt(dn);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < l; ++j) x(i, j) = (rng.next_u64() >> 63) ? v : -v;
      break;
    }
    case Ensemble::Ternary: {
      const double v = std::sqrt(3.0 / dn);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < l; ++j) {
          const auto r = rng.below(6);
          x(i, j) = r == 0 ? v : (r == 1 ? -v : 0.0);
        }
      // An all-zero column cannot be normalized; redraw it from the stream.
      if (normalize)
        for (std::size_t j = 0; j < l; ++j)
          while (x.col(static_cast<Eigen::Index>(j)).isZero(0.0))
            for (std::size_t i = 0; i < n; ++i) {
              const auto r = rng.below(6);
              x(i, j) = r == 0 ? v : (r == 1 ? -v : 0.0);
            }
      break;
    }
    case Ensemble::PartialOrthonormal: {
      require(n <= l, ErrorCode::InvalidArgument,
              "partial orthonormal ensemble needs n <= l");
      const Matrix basis = is_power_of_two(l) ? hadamard(l) : gaussian_orthonormal(l, rng);
      std::vector<std::size_t> rows(l);
      std::iota(rows.begin(), rows.end(), 0);
      for (std::size_t i = 0; i < n; ++i)
        std::swap(rows[i], rows[i + rng.below(l - i)]);
      std::sort(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n));
      for (std::size_t i = 0; i < n; ++i) x.row(i) = basis.row(rows[i]);
      break;
    }
    case Ensemble::Explicit:
      fail(ErrorCode::InvalidArgument, "explicit matrices are built with from_entries");
  }
  if (normalize) normalize_columns(x);
  return SensingMatrix(std::move(x), ensemble, seed, normalize);
}

SensingMatrix SensingMatrix::from_entries(Matrix entries, bool normalize) {
  require(entries.rows() >= 1 && entries.cols() >= 1, ErrorCode::InvalidArgument,
          "matrix dimensions must be positive");
  if (normalize) normalize_columns(entries);
  return SensingMatrix(std::move(entries), Ensemble::Explicit, 0, normalize);
}

RegressionProblem::RegressionProblem(SensingMatrix m, Vector y, std::optional<Vector> theta0,
                                     double sigma)
    : matrix(std::move(m)), measurements(std::move(y)), truth(std::move(theta0)),
      noise_sigma(sigma) {
  require(static_cast<std::size_t>(measurements.size()) == matrix.rows(),
          ErrorCode::DimensionMismatch, "measurement length must equal matrix rows");
  require(noise_sigma >= 0.0, ErrorCode::InvalidArgument, "noise sigma must be nonnegative");
  if (truth)
    require(static_cast<std::size_t>(truth->size()) == matrix.cols(),
            ErrorCode::DimensionMismatch, "truth length must equal matrix columns");
}

double mutual_coherence(const Matrix& x) {
  require(x.cols() >= 2, ErrorCode::InvalidArgument, "coherence needs at least two columns");
  const Vector norms = x.colwise().norm().transpose();
  if ((norms.array() == 0.0).any())
    fail(ErrorCode::Degenerate, "coherence undefined for a zero column");
  const Matrix gram = x.transpose() * x;
  double mu = 0.0;
  for (Eigen::Index i = 0; i < x.cols(); ++i)
    for (Eigen::Index j = i + 1; j < x.cols(); ++j)
      mu = std::max(mu, std::abs(gram(i, j)) / (norms(i) * norms(j)));
  return std::min(mu, 1.0);
}

double welch_bound(std::size_t n, std::size_t l) {
  require(n >= 1 && l > n, ErrorCode::InvalidArgument,
          "Welch bound is defined for l > n >= 1");
  const double dn = static_cast<double>(n), dl = static_cast<double>(l);
  return std::sqrt((dl - dn) / (dn * (dl - 1.0)));
}

std::size_t numerical_rank(const Matrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

std::size_t spark(const Matrix& x, const SearchGuard& guard) {
  const auto n = static_cast<std::size_t>(x.rows());
  const auto l = static_cast<std::size_t>(x.cols());
  if (l > guard.max_cols)
    fail(ErrorCode::GuardExceeded,
         "spark: exhaustive search over " + std::to_string(l) +
             " columns refused (limit " + std::to_string(guard.max_cols) +
             "); the search is combinatorial in the number of columns");
  for (std::size_t m = 1; m <= std::min(n, l); ++m) {
    Matrix sub(n, m);
    const bool all_independent = for_each_subset(l, m, [&](const std::vector<std::size_t>& s) {
      for (std::size_t j = 0; j < m; ++j) sub.col(j) = x.col(s[j]);
      // A zero block has rank 0 regardless of the relative tolerance.
      return numerical_rank(sub) == m;
    });
    if (!all_independent) return m;
  }
  return n + 1;
}

double rip_constant(const Matrix& x, std::size_t k, const SearchGuard& guard) {
  const auto n = static_cast<std::size_t>(x.rows());
  const auto l = static_cast<std::size_t>(x.cols());
  require(k >= 1 && k <= n, ErrorCode::InvalidArgument, "rip_constant needs 1 <= k <= N");
  require(k <= l, ErrorCode::InvalidArgument, "rip_constant needs k <= l");
  if (l > guard.max_cols)
    fail(ErrorCode::GuardExceeded, "rip_constant: exhaustive search over " +
                                       std::to_string(l) + " columns refused (limit " +
                                       std::to_string(guard.max_cols) + ")");
  if (binomial_capped(l, k, guard.max_subsets) > guard.max_subsets)
    fail(ErrorCode::GuardExceeded, "rip_constant: more than " +
                                       std::to_string(guard.max_subsets) +
                                       " supports to enumerate");
  const Matrix gram = x.transpose() * x;
  Matrix g(k, k);
  double delta = 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig;
  for_each_subset(l, k, [&](const std::vector<std::size_t>& s) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) g(a, b) = gram(s[a], s[b]);
    eig.compute(g, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    delta = std::max({delta, 1.0 - ev(0), ev(ev.size() - 1) - 1.0});
    return true;
  });
  return delta;
}

MatrixDiagnostics diagnose(const Matrix& x, std::size_t max_rip_order, const SearchGuard& guard) {
  MatrixDiagnostics d;
  const auto n = static_cast<std::size_t>(x.rows());
  const auto l = static_cast<std::size_t>(x.cols());
  d.coherence = mutual_coherence(x);
  if (l > n) d.welch_lower_bound = welch_bound(n, l);
  if (l <= guard.max_cols) d.spark = spark(x, guard);
  for (std::size_t k = 1; k <= std::min({max_rip_order, n, l}); ++k) {
    if (l > guard.max_cols || binomial_capped(l, k, guard.max_subsets) > guard.max_subsets) break;
    d.rip_constants[k] = rip_constant(x, k, guard);
  }
  return d;
}

Vector ls_solution(const RegressionProblem& p) {
  const Matrix& x = p.X();
  require(x.rows() >= x.cols(), ErrorCode::Singular,
          "least squares needs N >= l for an invertible normal matrix");
  Eigen::ColPivHouseholderQR<Matrix> qr(x);
  qr.setThreshold(1e-10);
  if (qr.rank() < x.cols()) fail(ErrorCode::Singular, "normal matrix X^T X is singular");
  return qr.solve(p.y());
}

Vector ridge_solution(const RegressionProblem& p, double lambda) {
  require(lambda >= 0.0, ErrorCode::InvalidArgument, "ridge lambda must be nonnegative");
  if (lambda == 0.0) return ls_solution(p);
  const Matrix& x = p.X();
  Matrix a = x.transpose() * x;
  a.diagonal().array() += lambda;
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) fail(ErrorCode::Singular, "ridge system is not positive definite");
  return llt.solve(x.transpose() * p.y());
}

Vector min_l2_solution(const RegressionProblem& p) {
  const Matrix& x = p.X();
  require(x.rows() < x.cols(), ErrorCode::InvalidArgument,
          "minimum-norm solution is for underdetermined systems (N < l)");
  if (numerical_rank(x) < static_cast<std::size_t>(x.rows()))
    fail(ErrorCode::Singular, "X does not have full row rank");
  const Matrix xxt = x * x.transpose();
  Eigen::LDLT<Matrix> ldlt(xxt);
  return x.transpose() * ldlt.solve(p.y());
}

Matrix null_space(const Matrix& x, double rel_tol) {
  const auto l = x.cols();
  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeFullV);
  const std::size_t r = numerical_rank(x, rel_tol);
  return svd.matrixV().rightCols(l - static_cast<Eigen::Index>(r));
}

bool l1_minimality_check(const Matrix& x, const Vector& theta, std::size_t trials,
                         std::uint64_t seed) {
  require(theta.size() == x.cols(), ErrorCode::DimensionMismatch,
          "theta length must equal matrix columns");
  const Matrix basis = null_space(x);
  if (basis.cols() == 0) return true;
  CounterRng rng(seed);
  Vector g(basis.cols());
  for (std::size_t t = 0; t < trials; ++t) {
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = rng.normal();
    const Vector z = basis * g;
    double on_support = 0.0, off_support = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      if (theta(i) != 0.0)
        on_support += (theta(i) > 0 ? 1.0 : -1.0) * z(i);
      else
        off_support += std::abs(z(i));
    }
    if (std::abs(on_support) > off_support + 1e-12 * z.lpNorm<1>()) return false;
  }
  return true;
}

}  // namespace sparsekit
