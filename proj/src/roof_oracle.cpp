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

#include "monogamy/roof_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "monogamy/random.hpp"
#include "monogamy/states.hpp"

namespace monogamy {

namespace {

using Rows = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 4, Eigen::RowMajor>;

double row_term(const Rows& psi, Eigen::Index j) {
  return 2.0 * std::abs(psi(j, 0) * psi(j, 3) - psi(j, 1) * psi(j, 2));
}

double average(const Rows& psi) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < psi.rows(); ++j) acc += row_term(psi, j);
  return acc;
}

// Rows j, l <- [[c, s e^{i phi}], [-s e^{-i phi}, c]] applied to (row j, row l).
void rotate(Rows& psi, Eigen::Index j, Eigen::Index l, double theta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  const std::complex<double> e = std::polar(1.0, phi);
  const Eigen::Matrix<std::complex<double>, 1, 4> rj = psi.row(j), rl = psi.row(l);
  psi.row(j) = c * rj + s * e * rl;
  psi.row(l) = -s * std::conj(e) * rj + c * rl;
}

double pair_value(const Rows& psi, Eigen::Index j, Eigen::Index l, double theta, double phi) {
  Rows tmp(2, 4);
  tmp.row(0) = psi.row(j);
  tmp.row(1) = psi.row(l);
  rotate(tmp, 0, 1, theta, phi);
  return row_term(tmp, 0) + row_term(tmp, 1);
}

// Random-direction descent on the unitary orbit, then coordinate refinement.
double descend(Rows& psi, Rng& rng) {
  const Eigen::Index m = psi.rows();
  double value = average(psi);
  if (m < 2) return value;

  double step = 0.3;
  int failures = 0;
  for (int it = 0; it < 3000 && step > 1e-7; ++it) {
    const auto j = static_cast<Eigen::Index>(rng.next_u64() % static_cast<std::uint64_t>(m));
    auto l = static_cast<Eigen::Index>(rng.next_u64() % static_cast<std::uint64_t>(m - 1));
    if (l >= j) ++l;
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double base = row_term(psi, j) + row_term(psi, l);
    double best_theta = 0.0, best_pair = base;
    for (double theta : {step, -step}) {
      const double v = pair_value(psi, j, l, theta, phi);
      if (v < best_pair) {
        best_pair = v;
        best_theta = theta;
      }
    }
    if (best_theta != 0.0) {
      rotate(psi, j, l, best_theta, phi);
      value += best_pair - base;
      step = std::min(step * 1.5, std::numbers::pi / 4);
      failures = 0;
    } else if (++failures >= 2 * static_cast<int>(m * (m - 1))) {
      step *= 0.5;
      failures = 0;
    }
  }

  // Coordinate refinement: golden-section over theta for a fixed grid of phases per pair.
  constexpr int kPhases = 8;
  for (int sweep = 0; sweep < 4; ++sweep) {
    bool improved = false;
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index l = j + 1; l < m; ++l) {
        for (int k = 0; k < kPhases; ++k) {
          const double phi = 2.0 * std::numbers::pi * k / kPhases;
          const double base = row_term(psi, j) + row_term(psi, l);
          double a = -0.2, b = 0.2;
          const double g = (std::sqrt(5.0) - 1.0) / 2.0;
          double x1 = b - g * (b - a), x2 = a + g * (b - a);
          double f1 = pair_value(psi, j, l, x1, phi), f2 = pair_value(psi, j, l, x2, phi);
          for (int it = 0; it < 40; ++it) {
            if (f1 < f2) {
              b = x2, x2 = x1, f2 = f1;
              x1 = b - g * (b - a);
              f1 = pair_value(psi, j, l, x1, phi);
            } else {
              a = x1, x1 = x2, f1 = f2;
              x2 = a + g * (b - a);
              f2 = pair_value(psi, j, l, x2, phi);
            }
          }
          const double theta = f1 < f2 ? x1 : x2;
          const double v = std::min(f1, f2);
          if (v < base - 1e-15) {
            rotate(psi, j, l, theta, phi);
            value += v - base;
            improved = true;
          }
        }
      }
    }
    if (!improved) break;
  }
  return average(psi);
}

}  // namespace

RoofSearch roof_search(const ComplexMatrix& rho, int restarts, std::uint64_t seed) {
  validate_density(rho, "concurrence_roof_oracle");
  if (rho.rows() != 4) throw std::invalid_argument("concurrence_roof_oracle: expected 4x4 density matrix");
  restarts = std::max(restarts, 1);

  const Eigensystem es = hermitian_eigensystem(rho);
  const double top = std::max(es.spectrum[0], 0.0);
  int rank = 0;
  while (rank < 4 && es.spectrum[static_cast<std::size_t>(rank)] > 1e-12 * std::max(top, 1.0)) ++rank;
  rank = std::max(rank, 1);

  // W^T: row k is sqrt(lambda_k) v_k^T.
  Rows wt(rank, 4);
  for (int k = 0; k < rank; ++k) {
    const double lam = std::max(es.spectrum[static_cast<std::size_t>(k)], 0.0);
    wt.row(k) = std::sqrt(lam) * es.vectors.col(k).transpose();
  }

  RoofSearch out;
  out.rank = rank;
  out.eigen_average = average(wt);
  out.best = out.eigen_average;
  out.best_after_restart.push_back(out.best);

  Rng rng(seed);
  const int sizes = 4 - rank + 1;
  for (int r = 1; r < restarts; ++r) {
    const int m = rank + (r - 1) % sizes;
    const ComplexMatrix u = haar_unitary(m, rng).leftCols(rank);
    Rows psi = u * wt;
    const double v = descend(psi, rng);
    out.best = std::min(out.best, v);
    out.best_after_restart.push_back(out.best);
  }
  return out;
}

double concurrence_roof_oracle(const ComplexMatrix& rho, int restarts, std::uint64_t seed) {
  return roof_search(rho, restarts, seed).best;
}

}  // namespace monogamy
