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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monogamy/states.hpp"

namespace monogamy {

/// Inequality families that can be swept. Grid families are scalar inequalities over a
/// parameter box; state-level families sample random three-qubit pure states.
enum class Family {
  Lemma1,       ///< (1+x)^mu >= tight >= loose >= naive over (x, mu)
  GqSuper,      ///< g_q(x^2+y^2) >= g_q(x^2) + g_q(y^2) over (x, y, q)
  FalphaAdd,    ///< f_a(sqrt(x^2+y^2)) >= f_a(x) + f_a(y), a >= 2, over (x, y, alpha)
  FalphaSqAdd,  ///< squared variant for (sqrt 7 - 1)/2 <= a < 2, over (x, y, alpha)
  Lemma2,       ///< g_q^mu(x^2+y^2) >= new pair bound of (g_q(x^2), g_q(y^2)), over (x, y, q, mu)
  Lemma5,       ///< f_a^mu(sqrt(x^2+y^2)) >= linear pair bound of (f_a(x), f_a(y)), over (x, y, alpha, mu)
  Lemma6,       ///< f_a^(2mu)(...) >= squared pair bound, over (x, y, alpha, mu)
  CKW,          ///< C^2(A|BC) >= C^2(AB) + C^2(AC)
  Remark1,      ///< T_q^eta(A|BC) >= pair bound of the two-qubit Tsallis values
  Remark2,      ///< E_a^mu(A|BC) >= linear pair bound, a >= 2
  Remark3,      ///< E_a^gamma(A|BC) >= squared pair bound, a in the window
};

std::string_view family_id(Family f);
std::optional<Family> parse_family(std::string_view id);
bool is_state_level(Family f);
std::span<const Family> all_families();

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  /// min + i (max - min) / (steps - 1), with the last value exactly max.
  std::vector<double> values() const;
};

struct SweepSpec {
  Family family = Family::Lemma1;
  std::vector<Axis> grid;
  int random_samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
};

/// Default grid for a family: 200 steps per axis for two-axis families, 60 for the
/// x/y axes otherwise, with the parameter axes at 11 (q) and 13 (mu) steps for the
/// four-axis families.
SweepSpec default_sweep(Family f);

/// Axis names in evaluation order, e.g. {"x", "mu"} for Lemma1.
std::vector<std::string> axis_names(Family f);

struct Violation {
  std::vector<double> point;
  double margin = 0.0;
};

struct SweepReport {
  Family family = Family::Lemma1;
  long points = 0;
  double min_margin = 0.0;
  std::vector<double> argmin;
  std::vector<Violation> violations;  ///< first kMaxStoredViolations, in evaluation order
  long violation_count = 0;
  double tolerance = 1e-12;
  /// Axis spacing of the grid that produced the report (used for refinement).
  std::vector<double> spacing;
  std::vector<Axis> grid;

  bool clean() const { return violation_count == 0; }
};

inline constexpr std::size_t kMaxStoredViolations = 1000;

/// Signed margin LHS - RHS of a grid family at `point` (ordered as axis_names), or
/// nullopt when the point lies outside the family's domain (x^2 + y^2 <= 1, and
/// x >= y for the pair-bound families).
std::optional<double> family_margin(Family f, std::span<const double> point);

/// Evaluates every grid point and `random_samples` uniform samples inside the domain.
/// Throws std::domain_error when the grid leaves the family's parameter range and
/// std::invalid_argument for state-level families or malformed specs.
SweepReport run_sweep(const SweepSpec& spec);

/// Re-sweeps around the argmin of `report` with spacing reduced by `factor`:
/// coordinates argmin + j h / factor for |j| <= factor, clipped to the original box.
SweepReport refine_near_equality(const SweepReport& report, int factor);

struct StateCheckSpec {
  Family family = Family::CKW;
  int n_states = 1000;
  std::uint64_t seed = 0;
  std::vector<double> indices;    ///< q or alpha values (unused for CKW)
  std::vector<double> exponents;  ///< eta / mu / gamma values (unused for CKW)
  double tolerance = 1e-9;
};

StateCheckSpec default_state_check(Family f);

/// Margin of a state-level family on a three-qubit pure state with pivot qubit 0.
/// The two marginal values are ordered by size before the pair bound is applied.
double state_margin(Family f, const PureState& state, double index, double exponent);

/// Samples n_states random three-qubit states and evaluates every (index, exponent)
/// combination on each. Points are reported as (sample, index, exponent).
SweepReport run_state_check(const StateCheckSpec& spec);

/// Canonical JSON text: {"family", "points", "min_margin", "argmin", "violations", ...}.
std::string to_json(const SweepReport& report);

}  // namespace monogamy
