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
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace monogamy {

/// Raised when shifted QR fails to deflate within its iteration budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

namespace detail {

/// Householder reduction of a square complex matrix to upper Hessenberg form (in place).
template <typename Scalar>
void reduce_to_hessenberg(Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>& h) {
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  const Eigen::Index n = h.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index len = n - k - 1;
    Vector v = h.block(k + 1, k, len, 1);
    const Scalar norm_x = v.norm();
    if (norm_x == Scalar(0)) continue;
    const Complex x0 = v(0);
    const Complex phase = std::abs(x0) == Scalar(0) ? Complex(1) : x0 / std::abs(x0);
    v(0) += phase * norm_x;
    const Scalar vnorm = v.norm();
    if (vnorm == Scalar(0)) continue;
    v /= vnorm;
    // H <- P H P with P = I - 2 v v^dagger acting on rows/cols k+1..n-1.
    h.bottomRows(len) -= Scalar(2) * v * (v.adjoint() * h.bottomRows(len));
    h.rightCols(len) -= Scalar(2) * (h.rightCols(len) * v) * v.adjoint();
    h.block(k + 2, k, len - 1, 1).setZero();
  }
}

template <typename Scalar>
struct Givens {
  Scalar c;
  std::complex<Scalar> s;

  // Rotation G = [[c, s], [-conj(s), c]] with G * [x; y] = [r; 0].
  static Givens make(std::complex<Scalar> x, std::complex<Scalar> y) {
    const Scalar ax = std::abs(x);
    const Scalar r = std::hypot(ax, std::abs(y));
    if (r == Scalar(0)) return {Scalar(1), {0, 0}};
    if (ax == Scalar(0)) return {Scalar(0), {1, 0}};
    return {ax / r, (x / ax) * std::conj(y) / r};
  }
};

}  // namespace detail

/// Eigenvalues of a general complex square matrix.
///
/// Householder reduction to Hessenberg form followed by single-shift complex QR
/// with Wilkinson shifts and deflation. A subdiagonal entry is treated as zero when
/// it falls below `tol` relative to its neighbouring diagonal entries. The total
/// number of QR sweeps is capped at 200 * dim; on exhaustion a ConvergenceError
/// carrying the largest undeflated subdiagonal magnitude is thrown.
template <typename Scalar>
std::vector<std::complex<Scalar>> qr_eigenvalues(
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> h, Scalar tol = Scalar(1e-13)) {
  using Complex = std::complex<Scalar>;
  if (h.rows() != h.cols()) throw std::invalid_argument("qr_eigenvalues: matrix is not square");
  const Eigen::Index n = h.rows();
  if (n == 0) return {};
  if (!h.allFinite()) throw std::invalid_argument("qr_eigenvalues: non-finite entry");

  detail::reduce_to_hessenberg(h);

  const Scalar scale = std::max(h.cwiseAbs().maxCoeff(), std::numeric_limits<Scalar>::min());
  const Scalar floor = std::numeric_limits<Scalar>::epsilon() * scale;
  auto negligible = [&](Eigen::Index k) {
    const Scalar sub = std::abs(h(k, k - 1));
    const Scalar diag = std::abs(h(k, k)) + std::abs(h(k - 1, k - 1));
    return sub <= tol * diag || sub <= floor;
  };

  const long max_iter = 200L * static_cast<long>(n);
  long iter = 0;
  int since_deflation = 0;
  Eigen::Index hi = n - 1;
  std::vector<detail::Givens<Scalar>> rot(static_cast<std::size_t>(n));

  while (hi > 0) {
    if (negligible(hi)) {
      h(hi, hi - 1) = Complex(0);
      --hi;
      since_deflation = 0;
      continue;
    }
    Eigen::Index lo = hi - 1;
    while (lo > 0 && !negligible(lo)) --lo;
    if (lo > 0) h(lo, lo - 1) = Complex(0);

    if (++iter > max_iter) {
      Scalar residual = 0;
      for (Eigen::Index k = 1; k <= hi; ++k) residual = std::max(residual, std::abs(h(k, k - 1)));
      std::ostringstream msg;
      msg << "qr_eigenvalues: no convergence after " << max_iter << " iterations (dim " << n
          << ", largest subdiagonal " << residual << ")";
      throw ConvergenceError(msg.str(), static_cast<double>(residual));
    }

    // Wilkinson shift from the trailing 2x2 block; ad-hoc shifts break cycles.
    Complex shift;
    ++since_deflation;
    if (since_deflation % 11 == 0) {
      shift = h(hi, hi) + Scalar(0.75) * std::abs(h(hi, hi - 1));
    } else {
      const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const Complex half_tr = (a + d) / Scalar(2);
      const Complex disc = std::sqrt((a - d) * (a - d) / Scalar(4) + b * c);
      const Complex l1 = half_tr + disc, l2 = half_tr - disc;
      shift = std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
    }

    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) -= shift;
    for (Eigen::Index k = lo; k < hi; ++k) {
      auto g = detail::Givens<Scalar>::make(h(k, k), h(k + 1, k));
      rot[k] = g;
      for (Eigen::Index j = k; j <= hi; ++j) {
        const Complex x = h(k, j), y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (Eigen::Index k = lo; k < hi; ++k) {
      const auto& g = rot[k];
      const Eigen::Index last = std::min(k + 2, hi);
      for (Eigen::Index i = lo; i <= last; ++i) {
        const Complex x = h(i, k), y = h(i, k + 1);
        h(i, k) = g.c * x + std::conj(g.s) * y;
        h(i, k + 1) = -g.s * x + g.c * y;
      }
    }
    for (Eigen::Index k = lo; k <= hi; ++k) h(k, k) += shift;
  }

  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) out[k] = h(k, k);
  return out;
}

}  // namespace monogamy
