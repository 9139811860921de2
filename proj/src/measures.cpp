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

#include "monogamy/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "monogamy/linalg.hpp"

namespace monogamy {

namespace {


double checked_unit_interval(double x, const char* who) {
  constexpr double slack = 1e-12;
  if (!(x >= -slack && x <= 1.0 + slack)) {
    std::ostringstream msg;
    msg << who << ": argument " << x << " outside [0, 1]";
    throw std::domain_error(msg.str());
  }
  return std::clamp(x, 0.0, 1.0);
}

}  // namespace

TsallisParam::TsallisParam(double q) : q_(q) {
  if (!(q > 0.0) || q == 1.0 || !std::isfinite(q)) {
    throw std::domain_error("TsallisParam: q must be positive, finite and different from 1");
  }
}

RenyiParam::RenyiParam(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || alpha == 1.0 || !std::isfinite(alpha)) {
    throw std::domain_error("RenyiParam: alpha must be positive, finite and different from 1");
  }
}

RenyiRegime RenyiParam::regime() const {
  if (alpha_ >= 2.0) return RenyiRegime::AlphaGE2;
  if (alpha_ >= kRenyiWindowMin) return RenyiRegime::AlphaWindow;
  std::ostringstream msg;
  msg << "RenyiParam: alpha " << alpha_ << " below (sqrt(7)-1)/2 = " << kRenyiWindowMin;
  throw std::domain_error(msg.str());
}

ComplexMatrix reduced_density(const PureState& state, std::span<const int> side_a) {
  const int n = state.n_qubits();
  if (side_a.empty() || static_cast<int>(side_a.size()) >= n) {
    throw std::invalid_argument("bipartition must be a proper nonempty subset of the qubits");
  }
  for (int q : side_a) {
    if (q < 0 || q >= n) throw std::invalid_argument("bipartition qubit index out of range");
  }
  return partial_trace<double>(density(state), n, side_a);
}

double concurrence_pure(const PureState& state, std::span<const int> side_a) {
  const ComplexMatrix rho_a = reduced_density(state, side_a);
  const double purity = rho_a.cwiseAbs2().sum();  // tr rho^2 for Hermitian rho
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

std::vector<std::complex<double>> spin_flip_eigenvalues(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw std::invalid_argument("spin_flip_eigenvalues: expected 4x4 matrix");
  const ComplexMatrix& yy = spin_flip();
  const ComplexMatrix tilde = yy * rho.conjugate() * yy;
  auto ev = general_eigenvalues(rho * tilde);
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) { return a.real() > b.real(); });
  return ev;
}

std::array<double, 4> spin_flip_roots(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw std::invalid_argument("spin_flip_roots: expected 4x4 matrix");
  // sqrt(rho) Y sqrt(rho)^* has singular values sqrt(e_i); taking them directly avoids
  // the sqrt(eps) noise that square roots of tiny computed eigenvalues would carry.
  const Eigensystem es = hermitian_eigensystem(rho);
  Eigen::VectorXd root_vals(4);
  for (int i = 0; i < 4; ++i) root_vals(i) = std::sqrt(std::max(es.spectrum[i], 0.0));
  const ComplexMatrix sqrt_rho = es.vectors * root_vals.cast<std::complex<double>>().asDiagonal() * es.vectors.adjoint();
  const ComplexMatrix a = sqrt_rho * spin_flip() * sqrt_rho.conjugate();
  const Eigen::JacobiSVD<ComplexMatrix> svd(a);
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = svd.singularValues()(i);
  return out;
}

double concurrence_two_qubit(const ComplexMatrix& rho) {
  validate_density(rho, "concurrence_two_qubit");
  if (rho.rows() != 4) throw std::invalid_argument("concurrence_two_qubit: expected 4x4 density matrix");
  const auto r = spin_flip_roots(rho);
  return std::clamp(r[0] - r[1] - r[2] - r[3], 0.0, 1.0);
}

double g_q(double x, const TsallisParam& p) {
  if (!p.analytic()) {
    std::ostringstream msg;
    msg << "g_q: q = " << p.q() << " outside the analytic window";
    throw std::domain_error(msg.str());
  }
  x = checked_unit_interval(x, "g_q");
  const double s = std::sqrt(std::max(0.0, 1.0 - x));
  const double q = p.q();
  return (1.0 - std::pow((1.0 + s) / 2.0, q) - std::pow((1.0 - s) / 2.0, q)) / (q - 1.0);
}

double f_alpha(double x, const RenyiParam& p) {
  if (!p.analytic()) {
    std::ostringstream msg;
    msg << "f_alpha: alpha = " << p.alpha() << " below (sqrt(7)-1)/2";
    throw std::domain_error(msg.str());
  }
  x = checked_unit_interval(x, "f_alpha");
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  const double a = p.alpha();
  return std::log2(std::pow((1.0 - s) / 2.0, a) + std::pow((1.0 + s) / 2.0, a)) / (1.0 - a);
}

double tsallis_pure(const PureState& state, std::span<const int> side_a, const TsallisParam& p) {
  const double tr = trace_power(reduced_density(state, side_a), p.q());
  return (1.0 - tr) / (p.q() - 1.0);
}

double tsallis_two_qubit(const ComplexMatrix& rho, const TsallisParam& p) {
  const double c = concurrence_two_qubit(rho);
  return g_q(c * c, p);
}

double renyi_pure(const PureState& state, std::span<const int> side_a, const RenyiParam& p) {
  const double tr = trace_power(reduced_density(state, side_a), p.alpha());
  return std::log2(tr) / (1.0 - p.alpha());
}

double renyi_two_qubit(const ComplexMatrix& rho, const RenyiParam& p) {
  return f_alpha(concurrence_two_qubit(rho), p);
}

}  // namespace monogamy
