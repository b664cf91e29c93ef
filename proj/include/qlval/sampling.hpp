// Copyright 2026 The qlval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded sampling helpers. Distributions are hand-rolled on top of the raw
// mt19937_64 stream so outputs do not depend on the standard library's
// unspecified distribution algorithms; identical seeds give identical draws
// on any conforming implementation.

#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "qlval/linalg.hpp"

namespace qlval {

/** Uniform double in [0, 1), 53 random bits. */
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/** Standard normal via Box-Muller. */
inline double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

/** Complex vector with independent standard-normal re/im parts. */
inline CVector random_complex_vector(int n, std::mt19937_64& rng) {
  CVector v(static_cast<size_t>(n));
  for (Complex& z : v) z = Complex(gaussian(rng), gaussian(rng));
  return v;
}

/** Haar-ish random unit state (normalized Gaussian vector). */
inline StateVector random_unit_state(int n, std::mt19937_64& rng) {
  while (true) {
    CVector v = random_complex_vector(n, rng);
    if (norm2(v) > 1e-6) return make_state(v);
  }
}

/** SplitMix64 finalizer; mixes a base seed with two stream indices. */
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (a + 1) + 0xBF58476D1CE4E5B9ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace qlval
