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

#include "monogamy/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "monogamy/measures.hpp"
#include "monogamy/reference.hpp"

namespace monogamy {

namespace {

struct Triple {
  double whole;
  double ab;
  double ac;
};

Triple example_values(Regime regime, double index) {
  const PureState s = example_state();
  const ComplexMatrix rho = density(s);
  const ComplexMatrix ab = partial_trace(rho, 3, {0, 1});
  const ComplexMatrix ac = partial_trace(rho, 3, {0, 2});
  if (regime == Regime::TsallisQ2to3) {
    const TsallisParam q(index);
    return {tsallis_pure(s, {0}, q), tsallis_two_qubit(ab, q), tsallis_two_qubit(ac, q)};
  }
  const RenyiParam a(index);
  return {renyi_pure(s, {0}, a), renyi_two_qubit(ab, a), renyi_two_qubit(ac, a)};
}

PowerParam power_for(Regime regime, double exponent) {
  return regime == Regime::RenyiWindow ? PowerParam::squared(exponent) : PowerParam::linear(exponent);
}

}  // namespace

PureState example_state() {
  AcinParams p;
  p.lambda = {std::sqrt(5.0) / 3.0, 0.0, std::sqrt(3.0) / 3.0, 1.0 / 3.0, 0.0};
  return acin_state(p);
}

bool ExampleResult::matches(double tol) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(std::abs(computed[i] - expected[i]) <= tol)) return false;
  }
  return true;
}

ExampleResult run_example(int which) {
  ExampleResult r;
  r.which = which;
  Regime regime;
  switch (which) {
    case 1:
      regime = Regime::TsallisQ2to3;
      r.measure = "Tsallis";
      r.index = 2.0;
      r.expected = reference::kTsallisQ2;
      break;
    case 2:
      regime = Regime::RenyiGE2;
      r.measure = "Renyi";
      r.index = 2.0;
      r.expected = reference::kRenyiAlpha2;
      break;
    case 3:
      regime = Regime::RenyiWindow;
      r.measure = "Renyi";
      r.index = kRenyiWindowMin;
      r.expected = reference::kRenyiWindowEdge;
      break;
    default: throw std::invalid_argument("example: expected 1, 2 or 3");
  }
  const Triple t = example_values(regime, r.index);
  r.computed[0] = t.whole;
  r.labels[0] = "A|BC";
  if (t.ab >= t.ac) {
    r.computed[1] = t.ab, r.computed[2] = t.ac;
    r.labels[1] = "AB", r.labels[2] = "AC";
  } else {
    r.computed[1] = t.ac, r.computed[2] = t.ab;
    r.labels[1] = "AC", r.labels[2] = "AB";
  }
  return r;
}

FigureSpec figure_spec(int which) {
  switch (which) {
    case 1: return {1, Regime::TsallisQ2to3, 2.0, 1.0, 3.0, 50};
    case 2: return {2, Regime::RenyiGE2, 2.0, 1.0, 4.0, 50};
    case 3: return {3, Regime::RenyiWindow, kRenyiWindowMin, 2.0, 6.0, 50};
    default: throw std::invalid_argument("figure: expected 1, 2 or 3");
  }
}

std::vector<FigureRow> figure_rows(const FigureSpec& spec) {
  const Triple t = example_values(spec.regime, spec.index);
  const double e1 = std::max(t.ab, t.ac), e2 = std::min(t.ab, t.ac);
  const long count = std::lround((spec.last - spec.first) * spec.steps_per_unit);
  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(count + 1));
  for (long i = 0; i <= count; ++i) {
    const double x = spec.first + static_cast<double>(i) / spec.steps_per_unit;
    const BoundReport b = compare_bounds(std::pow(t.whole, x), e1, e2, power_for(spec.regime, x), spec.regime);
    rows.push_back({x, b.lhs, b.new_bound, b.prior_bound});
  }
  return rows;
}

void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows) {
  out << "exponent,lhs,new_bound,prior_bound\n";
  char line[160];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%.2f,%.17g,%.17g,%.17g\n", r.exponent, r.lhs, r.new_bound, r.prior_bound);
    out << line;
  }
}

}  // namespace monogamy
