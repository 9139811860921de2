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

#include <string_view>
#include <vector>

#include "monogamy/states.hpp"

namespace monogamy {

enum class Ordering { Certified, Violated, Undetermined };

std::string_view to_string(Ordering o);

/// Evidence for C(rho_{A B_i}) >= C(rho_{A | B_{i+1} ... B_{N-1}}) at one position.
struct OrderingPosition {
  Ordering status = Ordering::Undetermined;
  double pair = 0.0;   ///< C(rho_{A B_i}), closed form
  double lower = 0.0;  ///< lower bracket of the remainder concurrence
  double upper = 0.0;  ///< upper bracket (equal to lower when the remainder is one qubit)
};

/// Checks the descending-concurrence hypothesis along `rest_order` for a pure state on
/// at most four qubits. When the remainder is a single qubit its concurrence is exact;
/// otherwise it is bracketed below by sqrt(sum_j C^2(rho_{A B_j})) and above by the
/// eigendecomposition average of pure-state concurrences. One entry per position
/// i = 0 .. rest_order.size() - 2.
std::vector<OrderingPosition> ordering_certificate(const PureState& state, int pivot, const std::vector<int>& rest_order);

/// Certified if every position is, Violated if any is, else Undetermined.
Ordering overall(const std::vector<OrderingPosition>& positions);

}  // namespace monogamy
