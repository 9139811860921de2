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

namespace monogamy::reference {

// Bump when any published value below changes.
inline constexpr int kTableVersion = 1;

// Published five-decimal values for the three-qubit example state
// l0 = sqrt(5)/3, l2 = sqrt(3)/3, l3 = 1/3, l1 = l4 = 0.
// Order: whole cut A|BC, the larger two-qubit marginal, the smaller one.
inline constexpr std::array<double, 3> kTsallisQ2{0.49383, 0.37037, 0.12346};
inline constexpr std::array<double, 3> kRenyiAlpha2{0.98230, 0.66742, 0.19010};
inline constexpr std::array<double, 3> kRenyiWindowEdge{0.99265, 0.83477, 0.41466};

inline constexpr double kRegressionTolerance = 1e-5;

}  // namespace monogamy::reference
