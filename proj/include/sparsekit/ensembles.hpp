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

// Sensing matrices, classical estimators and sparsity diagnostics.

#ifndef SPARSEKIT_ENSEMBLES_HPP
#define SPARSEKIT_ENSEMBLES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

namespace sparsekit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Ensemble {
  Gaussian,            // N(0, 1/N) entries
  Bernoulli,           // +-1/sqrt(N), equiprobable
  Ternary,             // +-sqrt(3/N) w.p. 1/6 each, 0 w.p. 2/3
  UniformSphere,       // Gaussian columns scaled to unit norm
  PartialOrthonormal,  // N distinct rows of a real l x l orthonormal matrix
  Explicit,            // caller-supplied entries
};

std::string_view to_string(Ensemble e) noexcept;
std::optional<Ensemble> parse_ensemble(std::string_view name) noexcept;

class SensingMatrix {
 public:
  // Entries are drawn in row-major order from CounterRng(seed).
  // PartialOrthonormal uses a normalized Sylvester-Hadamard matrix when l is
  // a power of two and the Q factor of a Gaussian l x l matrix otherwise.
  static SensingMatrix generate(Ensemble ensemble, std::size_t n, std::size_t l,
                                std::uint64_t seed, bool normalize);

  static SensingMatrix from_entries(Matrix entries, bool normalize = false);

  const Matrix& entries() const noexcept { return entries_; }
  std::size_t rows() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(entries_.cols()); }
  Ensemble ensemble() const noexcept { return ensemble_; }
  std::uint64_t seed() const noexcept { return seed_; }
  bool column_normalized() const noexcept { return column_normalized_; }

 private:
  SensingMatrix(Matrix entries, Ensemble ensemble, std::uint64_t seed, bool normalized)
      : entries_(std::move(entries)), ensemble_(ensemble), seed_(seed),
        column_normalized_(normalized) {}

  Matrix entries_;
  Ensemble ensemble_ = Ensemble::Explicit;
  std::uint64_t seed_ = 0;
  bool column_normalized_ = false;
};

// Scales every column to unit Euclidean norm. Zero columns are a
// Degenerate error.
void normalize_columns(Matrix& m);

struct RegressionProblem {
  RegressionProblem(SensingMatrix matrix, Vector measurements,
                    std::optional<Vector> truth = std::nullopt, double noise_sigma = 0.0);

  SensingMatrix matrix;
  Vector measurements;
  std::optional<Vector> truth;
  double noise_sigma = 0.0;

  const Matrix& X() const noexcept { return matrix.entries(); }
  const Vector& y() const noexcept { return measurements; }
};

// Limits on exhaustive subset searches.
struct SearchGuard {
  std::size_t max_cols = 20;
  std::size_t max_subsets = 200000;
};

struct MatrixDiagnostics {
  double coherence = 0.0;
  std::optional<double> welch_lower_bound;  // only for l > N
  std::optional<std::size_t> spark;
  std::map<std::size_t, double> rip_constants;
};

double mutual_coherence(const Matrix& x);
double welch_bound(std::size_t n, std::size_t l);

// Numerical rank with singular values below rel_tol * sigma_max treated as 0.
std::size_t numerical_rank(const Matrix& m, double rel_tol = 1e-10);

std::size_t spark(const Matrix& x, const SearchGuard& guard = {});
double rip_constant(const Matrix& x, std::size_t k, const SearchGuard& guard = {});

// Coherence and Welch bound always; spark and delta_1..delta_max_rip_order
// when the guard admits them.
MatrixDiagnostics diagnose(const Matrix& x, std::size_t max_rip_order = 0,
                           const SearchGuard& guard = {});

Vector ls_solution(const RegressionProblem& p);
Vector ridge_solution(const RegressionProblem& p, double lambda);
Vector min_l2_solution(const RegressionProblem& p);

// Monte-Carlo necessary-condition test for l1 minimality of theta among all
// solutions of X z = X theta. False means a null-space direction certifying
// non-minimality was found; true is not a proof.
bool l1_minimality_check(const Matrix& x, const Vector& theta, std::size_t trials,
                         std::uint64_t seed);

// Orthonormal basis (columns) of the null space of x.
Matrix null_space(const Matrix& x, double rel_tol = 1e-10);

// Visits every k-subset of {0..n-1} in lexicographic order; the visitor
// returns false to stop early. Returns false iff stopped early.
template <typename Visitor>
bool for_each_subset(std::size_t n, std::size_t k, Visitor&& visit);

}  // namespace sparsekit

#include <vector>

namespace sparsekit {

template <typename Visitor>
bool for_each_subset(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
    if (k == 0) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace sparsekit

#endif  // SPARSEKIT_ENSEMBLES_HPP
