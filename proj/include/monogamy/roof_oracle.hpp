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

#include <cstdint>
#include <vector>

#include "monogamy/linalg.hpp"

namespace monogamy {

/// Outcome of a brute-force convex-roof search for two-qubit concurrence.
struct RoofSearch {
  double best = 0.0;                       ///< smallest average found (an upper estimate)
  double eigen_average = 0.0;              ///< average over the eigendecomposition
  std::vector<double> best_after_restart;  ///< running minimum, one entry per restart
  int rank = 0;
};

/// Minimizes sum_j p_j C(phi_j) over pure-state decompositions of a 4x4 density matrix.
///
/// Decompositions of size M (rank <= M <= 4) are parameterized as Psi = U W^T, where
/// the columns of W are sqrt(lambda_k) v_k and U is an M x rank isometry; each row of
/// Psi is a subnormalized member psi_j with p_j C(psi_j) = 2 |psi_00 psi_11 - psi_01 psi_10|.
/// Restart 0 evaluates the eigendecomposition itself. Later restarts draw U from the
/// Haar measure (cycling M through rank..4) and descend with random two-row unitary
/// rotations followed by a sweep of coordinate line searches over every row pair.
RoofSearch roof_search(const ComplexMatrix& rho, int restarts, std::uint64_t seed);

double concurrence_roof_oracle(const ComplexMatrix& rho, int restarts = 200, std::uint64_t seed = 0);

}  // namespace monogamy
