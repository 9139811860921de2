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
#include <iosfwd>
#include <string>
#include <vector>

#include "monogamy/bounds.hpp"
#include "monogamy/states.hpp"

namespace monogamy {

/// The three-qubit example state l0 = sqrt(5)/3, l2 = sqrt(3)/3, l3 = 1/3.
PureState example_state();

struct ExampleResult {
  int which = 1;
  std::string measure;  ///< "Tsallis" or "Renyi"
  double index = 0.0;   ///< q or alpha
  std::array<std::string, 3> labels;
  std::array<double, 3> computed{};
  std::array<double, 3> expected{};

  bool matches(double tol) const;
};

/// Entanglement of A|BC and of the two marginals (larger first) for example 1, 2 or 3.
/// Throws std::invalid_argument for any other number.
ExampleResult run_example(int which);

struct FigureRow {
  double exponent = 0.0;
  double lhs = 0.0;
  double new_bound = 0.0;
  double prior_bound = 0.0;
};

struct FigureSpec {
  int which = 1;
  Regime regime = Regime::TsallisQ2to3;
  double index = 2.0;     ///< q or alpha
  double first = 1.0;     ///< exponent grid start
  double last = 3.0;      ///< exponent grid end (inclusive)
  int steps_per_unit = 50;
};

FigureSpec figure_spec(int which);

/// Rows at exponent first + i / steps_per_unit, i = 0 .. (last - first) * steps_per_unit.
std::vector<FigureRow> figure_rows(const FigureSpec& spec);

/// Header `exponent,lhs,new_bound,prior_bound`, '\n' line endings. The exponent column is
/// printed with two decimals (it is a grid label); value columns with 17 significant digits.
void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows);

}  // namespace monogamy
