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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monogamy/linalg.hpp"
#include "monogamy/random.hpp"

namespace monogamy {

inline constexpr double kNormTolerance = 1e-10;

/// Normalized n-qubit pure state. Amplitude index bit (n-1-q) belongs to qubit q.
class PureState {
 public:
  /// Throws std::invalid_argument unless amplitudes has 2^n entries with unit norm.
  PureState(int n_qubits, ComplexVector amplitudes);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  std::complex<double> operator[](Eigen::Index i) const { return amplitudes_(i); }

  /// Normalizes `raw` first; throws if it is the zero vector.
  static PureState normalized(int n_qubits, const ComplexVector& raw);
  /// Computational basis state |bits>, e.g. basis(3, 0b101) = |101>.
  static PureState basis(int n_qubits, std::uint64_t index);

 private:
  int n_qubits_;
  ComplexVector amplitudes_;
};

/// Parameters of the five-term canonical three-qubit form
/// l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>.
struct AcinParams {
  std::array<double, 5> lambda{1.0, 0.0, 0.0, 0.0, 0.0};
  double phi = 0.0;

  /// Throws std::invalid_argument on negative amplitudes, phi outside [0, pi],
  /// or sum of squares off from one by more than kNormTolerance.
  void validate() const;
};

PureState acin_state(const AcinParams& p);

/// |psi><psi|.
ComplexMatrix density(const PureState& state);

/// Haar-random pure state on 1..4 qubits: a normalized vector of i.i.d.
/// standard complex Gaussians drawn from Rng(seed).
PureState random_pure_state(int n_qubits, std::uint64_t seed);
/// Same construction, drawing from a caller-owned generator.
PureState random_pure_state(int n_qubits, Rng& rng);

/// Density matrix checks: square 2^n, Hermitian, unit trace, no eigenvalue below -kNegativeClamp.
void validate_density(const ComplexMatrix& rho, const char* who);

}  // namespace monogamy
