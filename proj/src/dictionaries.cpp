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

#include "sparsekit/dictionaries.hpp"

#include <cmath>
#include <numbers>

#include "sparsekit/error.hpp"

namespace sparsekit {

std::pair<double, double> frame_operator_bounds(const Matrix& atoms) {
  require(atoms.rows() >= 1 && atoms.cols() >= 1, ErrorCode::InvalidArgument,
          "frame needs at least one atom");
  const Matrix s = atoms * atoms.transpose();
  Eigen::SelfAdjointEigenSolver<Matrix> eig(s, Eigen::EigenvaluesOnly);
  const Vector& ev = eig.eigenvalues();
  return {std::max(ev(0), 0.0), ev(ev.size() - 1)};
}

Frame::Frame(Matrix atoms) : atoms_(std::move(atoms)) {
  std::tie(lower_, upper_) = frame_operator_bounds(atoms_);
  if (lower_ <= 1e-12 * std::max(1.0, upper_))
    fail(ErrorCode::Degenerate, "atoms do not span the space (lower frame bound is zero)");
}

Frame frame_bounds(const Matrix& atoms) { return Frame(atoms); }

Matrix canonical_dual(const Frame& f) {
  const Matrix& psi = f.atoms();
  Eigen::LLT<Matrix> llt(psi * psi.transpose());
  if (llt.info() != Eigen::Success) fail(ErrorCode::Singular, "frame operator is singular");
  return llt.solve(psi);
}

Frame naimark_check(const Matrix& basis, const std::vector<std::size_t>& keep_rows) {
  require(basis.rows() == basis.cols(), ErrorCode::InvalidArgument, "basis must be square");
  require(!keep_rows.empty(), ErrorCode::InvalidArgument, "row selection is empty");
  const auto p = basis.rows();
  require((basis * basis.transpose() - Matrix::Identity(p, p)).cwiseAbs().maxCoeff() <= 1e-9,
          ErrorCode::InvalidArgument, "basis is not orthonormal");
  Matrix atoms(static_cast<Eigen::Index>(keep_rows.size()), p);
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (std::size_t r = 0; r < keep_rows.size(); ++r) {
    require(keep_rows[r] < static_cast<std::size_t>(p), ErrorCode::InvalidArgument,
            "row index out of range");
    require(!seen[keep_rows[r]], ErrorCode::InvalidArgument, "row selected twice");
    seen[keep_rows[r]] = true;
    atoms.row(static_cast<Eigen::Index>(r)) = basis.row(static_cast<Eigen::Index>(keep_rows[r]));
  }
  return Frame(std::move(atoms));
}

Matrix mercedes_benz_frame() {
  Matrix psi(2, 3);
  psi << 0.0, -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0),
      std::sqrt(2.0 / 3.0), -1.0 / std::sqrt(6.0), -1.0 / std::sqrt(6.0);
  return psi;
}

Vector gabor_window(std::size_t length, double sigma) {
  require(length >= 1, ErrorCode::InvalidArgument, "window length must be positive");
  require(sigma > 0, ErrorCode::InvalidArgument, "window spread must be positive");
  const auto l = static_cast<double>(length);
  Vector g(static_cast<Eigen::Index>(length));
  // Periodized Gaussian; images further than 8 sigma are negligible.
  const int wraps = 1 + static_cast<int>(std::ceil(8.0 * sigma / l));
  for (std::size_t n = 0; n < length; ++n) {
    double v = 0.0;
    for (int k = -wraps; k <= wraps; ++k) {
      const double d = static_cast<double>(n) + k * l;
      v += std::exp(-d * d / (2.0 * sigma * sigma));
    }
    g(static_cast<Eigen::Index>(n)) = v;
  }
  return g / g.norm();
}

Matrix gabor_atoms(const GaborParams& prm, std::vector<GaborAtomIndex>* index) {
  const std::size_t l = prm.length;
  require(l >= 1, ErrorCode::InvalidArgument, "Gabor length must be positive");
  require(prm.time_step >= 1 && l % prm.time_step == 0, ErrorCode::InvalidArgument,
          "Gabor time step must divide the length");
  require(prm.freq_step >= 1 && l % prm.freq_step == 0, ErrorCode::InvalidArgument,
          "Gabor frequency step must divide the length");
  const Vector g = gabor_window(l, prm.sigma);
  const double scale = 1.0 / std::sqrt(static_cast<double>(l));

  std::vector<GaborAtomIndex> atoms;
  for (std::size_t m = 0; m < l; m += prm.time_step)
    for (std::size_t i = 0; i < l; i += prm.freq_step) {
      atoms.push_back({m, i, false});
      const bool sine_vanishes = i == 0 || 2 * i == l;
      if (!sine_vanishes) atoms.push_back({m, i, true});
    }

  Matrix out(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(atoms.size()));
  for (std::size_t c = 0; c < atoms.size(); ++c) {
    const auto& a = atoms[c];
    for (std::size_t n = 0; n < l; ++n) {
      const std::size_t d = (n + l - a.shift) % l;
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(a.frequency * d % l) /
                           static_cast<double>(l);
      const double carrier = a.sine ? std::sin(phase) : std::cos(phase);
      out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(c)) =
          scale * g(static_cast<Eigen::Index>(d)) * carrier;
    }
  }
  if (index) *index = std::move(atoms);
  return out;
}

Frame gabor_dictionary(const GaborParams& params) { return Frame(gabor_atoms(params)); }

Matrix gabor_spectrogram(const Vector& s, double sigma) {
  const auto l = s.size();
  require(l >= 1, ErrorCode::InvalidArgument, "signal must be non-empty");
  const Vector g = gabor_window(static_cast<std::size_t>(l), sigma);
  Vector cos_table(l), sin_table(l);
  for (Eigen::Index t = 0; t < l; ++t) {
    const double phase = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(l);
    cos_table(t) = std::cos(phase);
    sin_table(t) = std::sin(phase);
  }
  Matrix energy(l, l);
  Vector windowed(l);
  for (Eigen::Index m = 0; m < l; ++m) {
    for (Eigen::Index d = 0; d < l; ++d) windowed(d) = s((m + d) % l) * g(d);
    for (Eigen::Index i = 0; i < l; ++i) {
      double re = 0.0, im = 0.0;
      for (Eigen::Index d = 0; d < l; ++d) {
        const Eigen::Index t = (i * d) % l;
        re += windowed(d) * cos_table(t);
        im += windowed(d) * sin_table(t);
      }
      const bool sine_vanishes = i == 0 || 2 * i == l;
      energy(i, m) = (re * re + (sine_vanishes ? 0.0 : im * im)) / static_cast<double>(l);
    }
  }
  return energy;
}

Vector analysis(const Frame& f, const Vector& s) {
  require(s.size() == f.atoms().rows(), ErrorCode::DimensionMismatch,
          "signal length differs from the frame dimension");
  return f.atoms().transpose() * s;
}

Vector synthesis(const Frame& f, const Vector& coeffs) {
  require(coeffs.size() == f.atoms().cols(), ErrorCode::DimensionMismatch,
          "coefficient count differs from the number of atoms");
  return f.atoms() * coeffs;
}

Gradient discrete_gradient(const Matrix& image) {
  require(image.rows() == image.cols(), ErrorCode::InvalidArgument, "image must be square");
  require(image.rows() >= 2, ErrorCode::InvalidArgument, "image must be at least 2 x 2");
  const auto l = image.rows();
  Gradient g{Matrix::Zero(l, l), Matrix::Zero(l, l)};
  g.dx.topRows(l - 1) = image.bottomRows(l - 1) - image.topRows(l - 1);
  g.dy.leftCols(l - 1) = image.rightCols(l - 1) - image.leftCols(l - 1);
  return g;
}

double tv_norm(const Matrix& image) {
  const Gradient g = discrete_gradient(image);
  return (g.dx.array().square() + g.dy.array().square()).sqrt().sum();
}

}  // namespace sparsekit
