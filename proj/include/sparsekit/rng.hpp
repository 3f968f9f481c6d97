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

#ifndef SPARSEKIT_RNG_HPP
#define SPARSEKIT_RNG_HPP

#include <cstdint>

namespace sparsekit {

// Counter-based generator. The i-th 64-bit output (i = 1, 2, ...) of a
// stream keyed by `seed` is
//
//   z = seed + i * 0x9E3779B97F4A7C15          (mod 2^64)
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   out = z ^ (z >> 31)
//
// i.e. the SplitMix64 finalizer applied to a Weyl counter. Doubles in [0,1)
// take the top 53 bits; normals use Box-Muller on two consecutive uniforms
// and cache the second deviate. Integers in [0, n) use Lemire's
// multiply-and-reject method. Only integer arithmetic, std::log, std::sqrt,
// std::cos and std::sin are involved, so streams replay across platforms.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) noexcept : key_(seed) {}

  std::uint64_t next_u64() noexcept;
  double uniform() noexcept;                   // [0, 1)
  double uniform(double lo, double hi) noexcept;
  double normal() noexcept;                    // N(0, 1)
  std::uint64_t below(std::uint64_t n) noexcept;  // [0, n), n > 0
  bool coin(double p) noexcept { return uniform() < p; }

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t mix64(std::uint64_t z) noexcept;

// Order-independent seed for a (seed, a, b, c) job coordinate.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0) noexcept;

}  // namespace sparsekit

#endif  // SPARSEKIT_RNG_HPP
