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

#include "monogamy/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace monogamy {

PureState::PureState(int n_qubits, ComplexVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > 8) throw std::invalid_argument("PureState: qubit count must be in [1, 8]");
  if (amplitudes_.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("PureState: amplitude count is not 2^n");
  }
  if (!amplitudes_.allFinite()) throw std::invalid_argument("PureState: non-finite amplitude");
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "PureState: squared norm " << norm2 << " differs from 1";
    throw std::invalid_argument(msg.str());
  }
}

PureState PureState::normalized(int n_qubits, const ComplexVector& raw) {
  const double norm = raw.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("PureState: zero vector");
  return PureState(n_qubits, raw / norm);
}

PureState PureState::basis(int n_qubits, std::uint64_t index) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (static_cast<Eigen::Index>(index) >= dim) throw std::invalid_argument("PureState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(n_qubits, std::move(v));
}

void AcinParams::validate() const {
  double sum = 0.0;
  for (double l : lambda) {
    if (!(l >= 0.0)) throw std::invalid_argument("AcinParams: amplitudes must be non-negative");
    sum += l * l;
  }
  if (std::abs(sum - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "AcinParams: sum of squared amplitudes is " << sum << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  if (!(phi >= 0.0 && phi <= std::numbers::pi)) throw std::invalid_argument("AcinParams: phi must lie in [0, pi]");
}

PureState acin_state(const AcinParams& p) {
  p.validate();
  ComplexVector v = ComplexVector::Zero(8);
  v(0b000) = p.lambda[0];
  v(0b100) = std::polar(p.lambda[1], p.phi);
  v(0b101) = p.lambda[2];
  v(0b110) = p.lambda[3];
  v(0b111) = p.lambda[4];
  return PureState(3, std::move(v));
}

ComplexMatrix density(const PureState& state) {
  return state.amplitudes() * state.amplitudes().adjoint();
}

PureState random_pure_state(int n_qubits, Rng& rng) {
  if (n_qubits < 1 || n_qubits > 4) throw std::invalid_argument("random_pure_state: qubit count must be in [1, 4]");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  return PureState::normalized(n_qubits, v);
}

PureState random_pure_state(int n_qubits, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure_state(n_qubits, rng);
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dimension must be positive");
  ComplexMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) z(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

void validate_density(const ComplexMatrix& rho, const char* who) {
  if (rho.rows() == 0 || rho.rows() != rho.cols()) {
    throw std::invalid_argument(std::string(who) + ": density matrix is not square");
  }
  if ((rho.rows() & (rho.rows() - 1)) != 0) {
    throw std::invalid_argument(std::string(who) + ": dimension is not a power of two");
  }
  if (!is_hermitian(rho)) throw std::invalid_argument(std::string(who) + ": density matrix is not Hermitian");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << who << ": trace " << tr << " differs from 1";
    throw std::invalid_argument(msg.str());
  }
  const Spectrum s = hermitian_eigenvalues(rho);
  if (s.values.back() < -kNegativeClamp) {
    std::ostringstream msg;
    msg << who << ": eigenvalue " << s.values.back() << " is negative";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace monogamy
