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

// Frames, canonical duals, Gabor dictionaries and discrete total variation.

#ifndef SPARSEKIT_DICTIONARIES_HPP
#define SPARSEKIT_DICTIONARIES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sparsekit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Columns of `atoms` are the frame vectors; A and B are the extreme
// eigenvalues of the frame operator atoms * atoms^T.
class Frame {
 public:
  // Throws Degenerate if A <= 1e-12 * max(1, B).
  explicit Frame(Matrix atoms);

  const Matrix& atoms() const noexcept { return atoms_; }
  double lower_bound() const noexcept { return lower_; }
  double upper_bound() const noexcept { return upper_; }
  bool tight() const noexcept { return upper_ - lower_ <= 1e-9 * upper_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(atoms_.rows()); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(atoms_.cols()); }

 private:
  Matrix atoms_;
  double lower_ = 0.0;
  double upper_ = 0.0;
};

// (A, B) without the frame check; A may be ~0 for non-frames.
std::pair<double, double> frame_operator_bounds(const Matrix& atoms);

Frame frame_bounds(const Matrix& atoms);

// (atoms atoms^T)^{-1} atoms.
Matrix canonical_dual(const Frame& f);

// Keeps `keep_rows` of a square orthonormal matrix; the columns of the
// result form a Parseval frame of dimension |keep_rows|.
Frame naimark_check(const Matrix& basis, const std::vector<std::size_t>& keep_rows);

// The 2 x 3 Mercedes-Benz Parseval frame.
Matrix mercedes_benz_frame();

struct GaborParams {
  std::size_t length = 32;  // l
  double sigma = 2.0;       // Gaussian window spread, samples
  std::size_t time_step = 1;  // alpha, divides l
  std::size_t freq_step = 1;  // beta, divides l
};

struct GaborAtomIndex {
  std::size_t shift;      // m
  std::size_t frequency;  // i
  bool sine;
};

// Circularly wrapped Gaussian window with unit Euclidean norm.
Vector gabor_window(std::size_t length, double sigma);

// Real Gabor atoms, shift-major. For shift m and frequency bin i the cosine
// atom is g((n - m) mod l) cos(2 pi i (n - m) / l) / sqrt(l) and the sine atom
// uses sin; sine atoms of bins 0 and l/2 vanish and are omitted. With every
// shift and bin present the frame operator is the identity.
Matrix gabor_atoms(const GaborParams& params, std::vector<GaborAtomIndex>* index = nullptr);
Frame gabor_dictionary(const GaborParams& params);

// Energy of every (frequency bin, shift) pair of the full real Gabor
// transform: rows are bins 0..l-1, columns shifts 0..l-1. Equals the sum of
// squared cosine and sine coefficients for that pair.
Matrix gabor_spectrogram(const Vector& s, double sigma);

Vector analysis(const Frame& f, const Vector& s);
Vector synthesis(const Frame& f, const Vector& coeffs);

struct Gradient {
  Matrix dx;  // I(i+1, j) - I(i, j), last row zero
  Matrix dy;  // I(i, j+1) - I(i, j), last column zero
};

Gradient discrete_gradient(const Matrix& image);
double tv_norm(const Matrix& image);

}  // namespace sparsekit

#endif  // SPARSEKIT_DICTIONARIES_HPP
