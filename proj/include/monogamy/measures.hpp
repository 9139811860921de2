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
#include <cmath>
#include <initializer_list>
#include <span>

#include "monogamy/linalg.hpp"
#include "monogamy/states.hpp"

namespace monogamy {

/// Lower edge (sqrt(7) - 1) / 2 of the Renyi index range with a closed form in concurrence.
inline const double kRenyiWindowMin = (std::sqrt(7.0) - 1.0) / 2.0;
/// Tsallis index range (5 -/+ sqrt(13)) / 2 with a closed form in squared concurrence.
inline const double kTsallisWindowMin = (5.0 - std::sqrt(13.0)) / 2.0;
inline const double kTsallisWindowMax = (5.0 + std::sqrt(13.0)) / 2.0;

/// Tsallis entropy index q (q > 0, q != 1).
class TsallisParam {
 public:
  explicit TsallisParam(double q);
  double q() const { return q_; }
  /// q inside [(5 - sqrt 13)/2, (5 + sqrt 13)/2]: T_q = g_q(C^2) holds for two qubits.
  bool analytic() const { return q_ >= kTsallisWindowMin && q_ <= kTsallisWindowMax; }
  /// q inside [2, 3], where g_q is superadditive and the monogamy bounds apply.
  bool superadditive() const { return q_ >= 2.0 && q_ <= 3.0; }

 private:
  double q_;
};

enum class RenyiRegime { AlphaGE2, AlphaWindow };

/// Renyi entropy index alpha (alpha > 0, alpha != 1).
class RenyiParam {
 public:
  explicit RenyiParam(double alpha);
  double alpha() const { return alpha_; }
  bool analytic() const { return alpha_ >= kRenyiWindowMin; }
  /// AlphaGE2 for alpha >= 2, AlphaWindow for (sqrt 7 - 1)/2 <= alpha < 2.
  /// Throws std::domain_error below the window.
  RenyiRegime regime() const;

 private:
  double alpha_;
};

// --- concurrence -----------------------------------------------------------

/// sqrt(2 (1 - tr rho_A^2)) for the cut side_a | rest.
double concurrence_pure(const PureState& state, std::span<const int> side_a);
inline double concurrence_pure(const PureState& state, std::initializer_list<int> side_a) {
  return concurrence_pure(state, std::span<const int>(side_a.begin(), side_a.size()));
}

/// Eigenvalues of rho (sigma_y x sigma_y) rho^* (sigma_y x sigma_y), descending by real part.
std::vector<std::complex<double>> spin_flip_eigenvalues(const ComplexMatrix& rho);

/// Square roots of the spin-flip eigenvalues, descending, computed as the singular values
/// of sqrt(rho) (sigma_y x sigma_y) sqrt(rho)^*.
std::array<double, 4> spin_flip_roots(const ComplexMatrix& rho);

/// Closed-form two-qubit concurrence max{0, l1 - l2 - l3 - l4} from the spin-flip spectrum.
double concurrence_two_qubit(const ComplexMatrix& rho);

// --- analytic conversion functions ---------------------------------------

/// g_q(x) = [1 - ((1 + sqrt(1-x))/2)^q - ((1 - sqrt(1-x))/2)^q] / (q - 1), x in [0, 1].
double g_q(double x, const TsallisParam& p);

/// f_alpha(x) = log2[((1 - sqrt(1-x^2))/2)^alpha + ((1 + sqrt(1-x^2))/2)^alpha] / (1 - alpha).
double f_alpha(double x, const RenyiParam& p);

// --- entanglement --------------------------------------------------------

/// (1 - tr rho_A^q) / (q - 1).
double tsallis_pure(const PureState& state, std::span<const int> side_a, const TsallisParam& p);
inline double tsallis_pure(const PureState& state, std::initializer_list<int> side_a, const TsallisParam& p) {
  return tsallis_pure(state, std::span<const int>(side_a.begin(), side_a.size()), p);
}

/// g_q(C^2(rho)) for a two-qubit density matrix; q must be in the analytic window.
double tsallis_two_qubit(const ComplexMatrix& rho, const TsallisParam& p);

/// log2(tr rho_A^alpha) / (1 - alpha).
double renyi_pure(const PureState& state, std::span<const int> side_a, const RenyiParam& p);
inline double renyi_pure(const PureState& state, std::initializer_list<int> side_a, const RenyiParam& p) {
  return renyi_pure(state, std::span<const int>(side_a.begin(), side_a.size()), p);
}

/// f_alpha(C(rho)) for a two-qubit density matrix; alpha >= (sqrt 7 - 1)/2.
double renyi_two_qubit(const ComplexMatrix& rho, const RenyiParam& p);

/// Reduced density matrix of `state` on side_a after validating the cut is proper.
ComplexMatrix reduced_density(const PureState& state, std::span<const int> side_a);

}  // namespace monogamy
