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

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace monogamy {

template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;

/// Real eigenvalues in descending order.
struct Spectrum {
  std::vector<double> values;

  double sum() const;
  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

/// Eigenvalues (descending) together with the matching unit eigenvectors as columns.
struct Eigensystem {
  Spectrum spectrum;
  ComplexMatrix vectors;
};

inline constexpr double kHermitianTolerance = 1e-10;
// Eigenvalues above -kNegativeClamp are treated as roundoff and clamped to zero.
inline constexpr double kNegativeClamp = 1e-8;

/// Largest entry of |m - m^dagger|.
template <typename Derived>
typename Derived::RealScalar hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<typename Derived::RealScalar>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kHermitianTolerance) {
  return hermitian_defect(m) <= tol;
}

/// Kronecker product a (x) b.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Reduced operator on the qubits in `keep`. Qubit 0 is the leftmost tensor factor
/// (most significant bit of the basis index). Kept qubits retain their relative order.
template <typename Scalar>
CMatrix<Scalar> partial_trace(const CMatrix<Scalar>& rho, int n_qubits, std::span<const int> keep) {
  if (n_qubits < 1 || n_qubits > 16) throw std::invalid_argument("partial_trace: qubit count out of range");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("partial_trace: matrix is not 2^n x 2^n");
  }
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");

  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate qubit index");
  }
  if (kept.front() < 0 || kept.back() >= n_qubits) {
    throw std::invalid_argument("partial_trace: qubit index out of range");
  }
  std::vector<int> traced;
  for (int q = 0; q < n_qubits; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }

  // Bit position of qubit q inside a basis index.
  auto bit = [n_qubits](int q) { return n_qubits - 1 - q; };
  auto scatter = [&](std::uint64_t packed, const std::vector<int>& qubits) {
    std::uint64_t idx = 0;
    const auto k = qubits.size();
    for (std::size_t i = 0; i < k; ++i) {
      if ((packed >> (k - 1 - i)) & 1U) idx |= std::uint64_t{1} << bit(qubits[i]);
    }
    return idx;
  };

  const Eigen::Index keep_dim = Eigen::Index{1} << kept.size();
  const std::uint64_t env_dim = std::uint64_t{1} << traced.size();
  std::vector<std::uint64_t> keep_idx(static_cast<std::size_t>(keep_dim));
  for (Eigen::Index i = 0; i < keep_dim; ++i) keep_idx[i] = scatter(static_cast<std::uint64_t>(i), kept);
  std::vector<std::uint64_t> env_idx(env_dim);
  for (std::uint64_t e = 0; e < env_dim; ++e) env_idx[e] = scatter(e, traced);

  CMatrix<Scalar> out = CMatrix<Scalar>::Zero(keep_dim, keep_dim);
  for (Eigen::Index r = 0; r < keep_dim; ++r) {
    for (Eigen::Index c = 0; c < keep_dim; ++c) {
      std::complex<Scalar> acc{0};
      for (std::uint64_t e : env_idx) acc += rho(keep_idx[r] | e, keep_idx[c] | e);
      out(r, c) = acc;
    }
  }
  return out;
}

inline ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::initializer_list<int> keep) {
  return partial_trace<double>(rho, n_qubits, std::span<const int>(keep.begin(), keep.size()));
}

/// Eigenvalues of a Hermitian matrix, descending. Throws if h is not Hermitian within tolerance.
Spectrum hermitian_eigenvalues(const ComplexMatrix& h);

/// Eigenvalues and eigenvectors of a Hermitian matrix, descending.
Eigensystem hermitian_eigensystem(const ComplexMatrix& h);

/// All eigenvalues of a general square matrix (dimension <= 16) via Hessenberg + shifted QR.
std::vector<std::complex<double>> general_eigenvalues(const ComplexMatrix& m);

/// Sum of lambda_i^p over the eigenvalues of a density operator.
/// Throws std::domain_error when an eigenvalue is below -kNegativeClamp.
double trace_power(const ComplexMatrix& rho, double p);

/// sigma_y (x) sigma_y.
const ComplexMatrix& spin_flip();

/// Single-qubit Pauli matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace monogamy
