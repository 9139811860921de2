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

#include "monogamy/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "monogamy/measures.hpp"

namespace monogamy {

namespace {

constexpr double kOrderingTolerance = 1e-10;

ComplexMatrix pair_marginal(const ComplexMatrix& rho, int n, int a, int b) {
  const int keep[2] = {a, b};
  return partial_trace<double>(rho, n, keep);
}

}  // namespace

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Certified: return "certified";
    case Ordering::Violated: return "violated";
    case Ordering::Undetermined: return "undetermined";
  }
  return "undetermined";
}

std::vector<OrderingPosition> ordering_certificate(const PureState& state, int pivot,
                                                   const std::vector<int>& rest_order) {
  const int n = state.n_qubits();
  if (n > 4) throw std::invalid_argument("ordering_certificate: at most four qubits supported");
  if (pivot < 0 || pivot >= n) throw std::invalid_argument("ordering_certificate: pivot out of range");
  std::vector<int> check = rest_order;
  check.push_back(pivot);
  std::sort(check.begin(), check.end());
  if (static_cast<int>(check.size()) != n || std::adjacent_find(check.begin(), check.end()) != check.end() ||
      check.front() != 0 || check.back() != n - 1) {
    throw std::invalid_argument("ordering_certificate: pivot plus rest_order must list every qubit once");
  }

  const ComplexMatrix rho = density(state);
  std::vector<double> pair_c;
  for (int b : rest_order) pair_c.push_back(concurrence_two_qubit(pair_marginal(rho, n, pivot, b)));

  std::vector<OrderingPosition> out;
  const int len = static_cast<int>(rest_order.size());
  for (int i = 0; i + 1 < len; ++i) {
    OrderingPosition pos;
    pos.pair = pair_c[i];
    if (i + 2 == len) {
      pos.lower = pos.upper = pair_c[len - 1];
      pos.status = pos.pair >= pos.upper - kOrderingTolerance ? Ordering::Certified : Ordering::Violated;
      out.push_back(pos);
      continue;
    }
    double sq = 0.0;
    for (int j = i + 1; j < len; ++j) sq += pair_c[j] * pair_c[j];
    pos.lower = std::sqrt(sq);

    // Reduced state of pivot + remainder, qubits kept in ascending order.
    std::vector<int> kept(rest_order.begin() + i + 1, rest_order.end());
    kept.push_back(pivot);
    std::sort(kept.begin(), kept.end());
    const int sub_n = static_cast<int>(kept.size());
    const int sub_pivot = static_cast<int>(std::find(kept.begin(), kept.end(), pivot) - kept.begin());
    const ComplexMatrix sub = partial_trace<double>(rho, n, kept);
    const Eigensystem es = hermitian_eigensystem(sub);
    double upper = 0.0;
    for (Eigen::Index k = 0; k < es.vectors.cols(); ++k) {
      const double p = es.spectrum[static_cast<std::size_t>(k)];
      if (p <= 1e-14) continue;
      const PureState phi = PureState::normalized(sub_n, es.vectors.col(k));
      upper += p * concurrence_pure(phi, {sub_pivot});
    }
    pos.upper = upper;
    if (pos.pair >= pos.upper - kOrderingTolerance) {
      pos.status = Ordering::Certified;
    } else if (pos.pair < pos.lower - kOrderingTolerance) {
      pos.status = Ordering::Violated;
    } else {
      pos.status = Ordering::Undetermined;
    }
    out.push_back(pos);
  }
  return out;
}

Ordering overall(const std::vector<OrderingPosition>& positions) {
  bool all = true;
  for (const auto& p : positions) {
    if (p.status == Ordering::Violated) return Ordering::Violated;
    all = all && p.status == Ordering::Certified;
  }
  return all ? Ordering::Certified : Ordering::Undetermined;
}

}  // namespace monogamy
