// Copyright 2026 The monogamy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "monogamy/linalg.hpp"

namespace monogamy {

/// Seedable generator with a fully specified output sequence.
///
/// Raw bits come from std::mt19937_64 (the standard fixes its algorithm and the
/// default-seeding procedure). Uniform doubles take the top 53 bits of one draw;
/// Gaussians use the Box-Muller transform on two uniforms. None of the
/// implementation-defined std distributions are used, so a given seed yields the
/// same sequence with any conforming standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1).
  std::complex<double> complex_normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.141592653589793238462643383279502884 * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  /// Real N(0, 1) (the real part of one Box-Muller pair).
  double normal() { return complex_normal().real(); }

 private:
  std::mt19937_64 engine_;
};

/// Haar-random unitary of dimension `dim` (QR of a complex Ginibre matrix with phase fix).
ComplexMatrix haar_unitary(int dim, Rng& rng);

}  // namespace monogamy
