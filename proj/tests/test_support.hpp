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

#ifndef SPARSEKIT_TEST_SUPPORT_HPP
#define SPARSEKIT_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

#include <gtest/gtest.h>

#include "sparsekit/ensembles.hpp"
#include "sparsekit/error.hpp"
#include "sparsekit/rng.hpp"

namespace sparsekit::testing {

template <typename F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected an error with code " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  CounterRng rng(seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.normal();
  return m;
}

inline Vector random_vector(std::size_t n, std::uint64_t seed, double scale = 1.0) {
  CounterRng rng(seed);
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v(i) = scale * rng.normal();
  return v;
}

inline Matrix random_orthonormal(std::size_t n, std::uint64_t seed) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, n, seed));
  return qr.householderQ() * Matrix::Identity(n, n);
}

inline Matrix hadamard4() {
  Matrix h(4, 4);
  h << 1, 1, 1, 1,
       1, -1, 1, -1,
       1, 1, -1, -1,
       1, -1, -1, 1;
  return h;
}

inline Matrix spark_example() {
  Matrix x(4, 6);
  x << 1, 0, 0, 0, 1, 0,
       0, 1, 0, 0, 1, 1,
       0, 0, 1, 0, 0, 1,
       0, 0, 0, 1, 0, 0;
  return x;
}

// Minimizes a convex function of two variables by repeated grid refinement.
inline Eigen::Vector2d grid_minimize(const std::function<double(double, double)>& f,
                                     double radius, int rounds = 60) {
  Eigen::Vector2d best(0, 0);
  double h = radius;
  for (int r = 0; r < rounds; ++r) {
    Eigen::Vector2d next = best;
    double fbest = f(best(0), best(1));
    for (int i = -10; i <= 10; ++i)
      for (int j = -10; j <= 10; ++j) {
        const double a = best(0) + h * i / 10.0, b = best(1) + h * j / 10.0;
        const double v = f(a, b);
        if (v < fbest) {
          fbest = v;
          next = {a, b};
        }
      }
    best = next;
    h *= 0.5;
  }
  return best;
}

}  // namespace sparsekit::testing

#endif  // SPARSEKIT_TEST_SUPPORT_HPP
