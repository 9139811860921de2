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

#include "monogamy/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "monogamy/qr_eigen.hpp"

namespace monogamy {

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

namespace {

void require_hermitian(const ComplexMatrix& h, const char* who) {
  if (h.rows() == 0 || h.rows() != h.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  }
  const double defect = hermitian_defect(h);
  if (!(defect <= kHermitianTolerance)) {
    std::ostringstream msg;
    msg << who << ": matrix is not Hermitian (max |M - M^dagger| = " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& h) {
  require_hermitian(h, "hermitian_eigensystem");
  const ComplexMatrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eigensystem: solver failed");

  // Eigen returns ascending order.
  const Eigen::Index n = sym.rows();
  Eigensystem out;
  out.spectrum.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.spectrum.values[i] = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix& h) {
  require_hermitian(h, "hermitian_eigenvalues");
  const ComplexMatrix sym = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eigenvalues: solver failed");
  Spectrum out;
  out.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + sym.rows());
  std::reverse(out.values.begin(), out.values.end());
  return out;
}

std::vector<std::complex<double>> general_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("general_eigenvalues: matrix is not square");
  if (m.rows() > 16) throw std::invalid_argument("general_eigenvalues: dimension above 16");
  return qr_eigenvalues<double>(m);
}

double trace_power(const ComplexMatrix& rho, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("trace_power: exponent must be positive");
  const Spectrum spec = hermitian_eigenvalues(rho);
  double acc = 0.0;
  for (double v : spec.values) {
    if (v < -kNegativeClamp) {
      std::ostringstream msg;
      msg << "trace_power: eigenvalue " << v << " below " << -kNegativeClamp << " (not a valid state)";
      throw std::domain_error(msg.str());
    }
    if (v > 0.0) acc += std::pow(v, p);
  }
  return acc;
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  using namespace std::complex_literals;
  ComplexMatrix m(2, 2);
  m << 0.0, -1i, 1i, 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

const ComplexMatrix& spin_flip() {
  static const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  return yy;
}

}  // namespace monogamy
