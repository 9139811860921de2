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

#include "monogamy/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "monogamy/bounds.hpp"
#include "monogamy/measures.hpp"

namespace monogamy {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view id;
  bool state_level;
};

constexpr std::array<FamilyInfo, 11> kFamilies{{
    {Family::Lemma1, "lemma1", false},
    {Family::GqSuper, "gq-super", false},
    {Family::FalphaAdd, "falpha-add", false},
    {Family::FalphaSqAdd, "falpha-sq-add", false},
    {Family::Lemma2, "lemma2", false},
    {Family::Lemma5, "lemma5", false},
    {Family::Lemma6, "lemma6", false},
    {Family::CKW, "ckw", true},
    {Family::Remark1, "remark1", true},
    {Family::Remark2, "remark2", true},
    {Family::Remark3, "remark3", true},
}};

constexpr std::array<Family, 11> kFamilyList{Family::Lemma1,  Family::GqSuper, Family::FalphaAdd, Family::FalphaSqAdd,
                                             Family::Lemma2,  Family::Lemma5,  Family::Lemma6,    Family::CKW,
                                             Family::Remark1, Family::Remark2, Family::Remark3};

// Largest alpha used for the (sqrt 7 - 1)/2 <= alpha < 2 families by default.
constexpr double kWindowDefaultMax = 1.99;

struct Range {
  double lo, hi;
  bool hi_open = false;
};

// Admissible parameter range of each axis for a family.
Range axis_range(Family f, std::string_view axis) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (axis == "x" || axis == "y") return {0.0, 1.0};
  if (axis == "mu") return {1.0, inf};
  if (axis == "q") return {2.0, 3.0};
  if (axis == "alpha") {
    if (f == Family::FalphaSqAdd || f == Family::Lemma6) return {kRenyiWindowMin, 2.0, true};
    return {2.0, inf};
  }
  throw std::logic_error("axis_range: unknown axis");
}

double pow_or_one(double x, double a) { return a == 0.0 ? 1.0 : std::pow(x, a); }

// x^2 + y^2 clipped to 1 when it exceeds 1 by roundoff only.
std::optional<double> radius_sq(double x, double y) {
  const double r = x * x + y * y;
  if (r > 1.0 + 1e-14) return std::nullopt;
  return std::min(r, 1.0);
}

std::optional<double> pair_family_margin(Family f, double x, double y, double index, double mu) {
  if (x < y) return std::nullopt;
  const auto r = radius_sq(x, y);
  if (!r) return std::nullopt;
  switch (f) {
    case Family::Lemma2: {
      const TsallisParam p(index);
      const double a = g_q(x * x, p), b = g_q(y * y, p);
      const PowerParam pw = PowerParam::linear(mu);
      return pow_or_one(g_q(*r, p), mu) - pair_bound(std::max(a, b), std::min(a, b), pw, Coupling::Linear);
    }
    case Family::Lemma5: {
      const RenyiParam p(index);
      const double a = f_alpha(x, p), b = f_alpha(y, p);
      const PowerParam pw = PowerParam::linear(mu);
      return pow_or_one(f_alpha(std::sqrt(*r), p), mu) -
             pair_bound(std::max(a, b), std::min(a, b), pw, Coupling::Linear);
    }
    case Family::Lemma6: {
      const RenyiParam p(index);
      const double a = f_alpha(x, p), b = f_alpha(y, p);
      const PowerParam pw = PowerParam::squared(2.0 * mu);
      return pow_or_one(f_alpha(std::sqrt(*r), p), 2.0 * mu) -
             pair_bound(std::max(a, b), std::min(a, b), pw, Coupling::Squared);
    }
    default:
      break;
  }
  throw std::logic_error("pair_family_margin: not a pair family");
}

void validate_grid(Family f, const std::vector<Axis>& grid) {
  const auto names = axis_names(f);
  if (grid.size() != names.size()) {
    throw std::invalid_argument("sweep: family " + std::string(family_id(f)) + " expects " +
                                std::to_string(names.size()) + " axes");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Axis& a = grid[i];
    if (a.name != names[i]) throw std::invalid_argument("sweep: axis " + a.name + " out of order, expected " + names[i]);
    if (a.steps < 2) throw std::invalid_argument("sweep: axis " + a.name + " needs at least 2 steps");
    if (!(a.min <= a.max)) throw std::invalid_argument("sweep: axis " + a.name + " has min > max");
    const Range r = axis_range(f, a.name);
    const bool hi_ok = r.hi_open ? a.max < r.hi : a.max <= r.hi;
    if (!(a.min >= r.lo) || !hi_ok) {
      std::ostringstream msg;
      msg << "sweep: axis " << a.name << " range [" << a.min << ", " << a.max << "] leaves the "
          << family_id(f) << " domain [" << r.lo << ", " << r.hi << (r.hi_open ? ")" : "]");
      throw std::domain_error(msg.str());
    }
  }
}

// Running minimum with lexicographic tie-breaking and violation bookkeeping.
class Accumulator {
 public:
  Accumulator(Family f, double tol) {
    report_.family = f;
    report_.tolerance = tol;
    report_.min_margin = std::numeric_limits<double>::infinity();
  }

  void add(const std::vector<double>& point, double margin) {
    ++report_.points;
    if (margin < report_.min_margin ||
        (margin == report_.min_margin && std::lexicographical_compare(point.begin(), point.end(),
                                                                      report_.argmin.begin(), report_.argmin.end()))) {
      report_.min_margin = margin;
      report_.argmin = point;
    }
    if (margin < -report_.tolerance) {
      ++report_.violation_count;
      if (report_.violations.size() < kMaxStoredViolations) report_.violations.push_back({point, margin});
    }
  }

  SweepReport finish() && {
    if (report_.points == 0) report_.min_margin = 0.0;
    return std::move(report_);
  }

 private:
  SweepReport report_;
};

// Odometer over explicit per-axis coordinate lists, first axis outermost.
template <typename Fn>
void for_each_point(const std::vector<std::vector<double>>& axes, Fn&& fn) {
  if (axes.empty()) return;
  for (const auto& a : axes) {
    if (a.empty()) return;
  }
  std::vector<std::size_t> idx(axes.size(), 0);
  std::vector<double> point(axes.size());
  while (true) {
    for (std::size_t k = 0; k < axes.size(); ++k) point[k] = axes[k][idx[k]];
    fn(point);
    std::size_t k = axes.size();
    while (k > 0) {
      --k;
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
  }
}

}  // namespace

std::string_view family_id(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info.id;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view id) {
  for (const auto& info : kFamilies) {
    if (info.id == id) return info.family;
  }
  return std::nullopt;
}

bool is_state_level(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info.state_level;
  }
  return false;
}

std::span<const Family> all_families() { return kFamilyList; }

std::vector<double> Axis::values() const {
  std::vector<double> out(static_cast<std::size_t>(std::max(steps, 0)));
  for (int i = 0; i < steps; ++i) out[i] = min + (max - min) * i / (steps - 1);
  if (steps >= 1) out.back() = max;
  return out;
}

std::vector<std::string> axis_names(Family f) {
  switch (f) {
    case Family::Lemma1: return {"x", "mu"};
    case Family::GqSuper: return {"x", "y", "q"};
    case Family::FalphaAdd:
    case Family::FalphaSqAdd: return {"x", "y", "alpha"};
    case Family::Lemma2: return {"x", "y", "q", "mu"};
    case Family::Lemma5:
    case Family::Lemma6: return {"x", "y", "alpha", "mu"};
    default: return {"sample", "index", "exponent"};
  }
}

SweepSpec default_sweep(Family f) {
  if (is_state_level(f)) throw std::invalid_argument("default_sweep: state-level family");
  SweepSpec s;
  s.family = f;
  const double window_lo = kRenyiWindowMin;
  switch (f) {
    case Family::Lemma1: s.grid = {{"x", 0.0, 1.0, 200}, {"mu", 1.0, 4.0, 200}}; break;
    case Family::GqSuper: s.grid = {{"x", 0.0, 1.0, 60}, {"y", 0.0, 1.0, 60}, {"q", 2.0, 3.0, 60}}; break;
    case Family::FalphaAdd: s.grid = {{"x", 0.0, 1.0, 60}, {"y", 0.0, 1.0, 60}, {"alpha", 2.0, 4.0, 60}}; break;
    case Family::FalphaSqAdd:
      s.grid = {{"x", 0.0, 1.0, 60}, {"y", 0.0, 1.0, 60}, {"alpha", window_lo, kWindowDefaultMax, 60}};
      break;
    case Family::Lemma2:
      s.grid = {{"x", 0.0, 1.0, 60}, {"y", 0.0, 1.0, 60}, {"q", 2.0, 3.0, 11}, {"mu", 1.0, 4.0, 13}};
      break;
    case Family::Lemma5:
      s.grid = {{"x", 0.0, 1.0, 60}, {"y", 0.0, 1.0, 60}, {"alpha", 2.0, 4.0, 11}, {"mu", 1.0, 4.0, 13}};
      break;
    case Family::Lemma6:
      s.grid = {{"x", 0.0, 1.0, 60}, {"y", 0.0, 1.0, 60}, {"alpha", window_lo, kWindowDefaultMax, 11},
                {"mu", 1.0, 4.0, 13}};
      break;
    default: break;
  }
  return s;
}

std::optional<double> family_margin(Family f, std::span<const double> p) {
  switch (f) {
    case Family::Lemma1: {
      const PowerChain c = power_chain(p[0], p[1]);
      return std::min({c.lhs - c.tight, c.tight - c.loose, c.loose - c.naive});
    }
    case Family::GqSuper: {
      const auto r = radius_sq(p[0], p[1]);
      if (!r) return std::nullopt;
      const TsallisParam q(p[2]);
      return g_q(*r, q) - g_q(p[0] * p[0], q) - g_q(p[1] * p[1], q);
    }
    case Family::FalphaAdd: {
      const auto r = radius_sq(p[0], p[1]);
      if (!r) return std::nullopt;
      const RenyiParam a(p[2]);
      return f_alpha(std::sqrt(*r), a) - f_alpha(p[0], a) - f_alpha(p[1], a);
    }
    case Family::FalphaSqAdd: {
      const auto r = radius_sq(p[0], p[1]);
      if (!r) return std::nullopt;
      const RenyiParam a(p[2]);
      const double whole = f_alpha(std::sqrt(*r), a), fx = f_alpha(p[0], a), fy = f_alpha(p[1], a);
      return whole * whole - fx * fx - fy * fy;
    }
    case Family::Lemma2:
    case Family::Lemma5:
    case Family::Lemma6: return pair_family_margin(f, p[0], p[1], p[2], p[3]);
    default: break;
  }
  throw std::invalid_argument("family_margin: " + std::string(family_id(f)) + " is not a grid family");
}

SweepReport run_sweep(const SweepSpec& spec) {
  if (is_state_level(spec.family)) {
    throw std::invalid_argument("run_sweep: " + std::string(family_id(spec.family)) +
                                " is state-level; use run_state_check");
  }
  if (!(spec.tolerance > 0.0)) throw std::invalid_argument("run_sweep: tolerance must be positive");
  if (spec.random_samples < 0) throw std::invalid_argument("run_sweep: negative sample count");
  validate_grid(spec.family, spec.grid);

  std::vector<std::vector<double>> axes;
  for (const auto& a : spec.grid) axes.push_back(a.values());

  Accumulator acc(spec.family, spec.tolerance);
  for_each_point(axes, [&](const std::vector<double>& pt) {
    if (auto m = family_margin(spec.family, pt)) acc.add(pt, *m);
  });

  Rng rng(spec.seed);
  const long max_attempts = 1000L * std::max(spec.random_samples, 1);
  long attempts = 0;
  for (int drawn = 0; drawn < spec.random_samples && attempts < max_attempts; ++attempts) {
    std::vector<double> pt(spec.grid.size());
    for (std::size_t k = 0; k < pt.size(); ++k) pt[k] = rng.uniform(spec.grid[k].min, spec.grid[k].max);
    if (auto m = family_margin(spec.family, pt)) {
      acc.add(pt, *m);
      ++drawn;
    }
  }

  SweepReport out = std::move(acc).finish();
  out.grid = spec.grid;
  for (const auto& a : spec.grid) out.spacing.push_back((a.max - a.min) / (a.steps - 1));
  return out;
}

SweepReport refine_near_equality(const SweepReport& report, int factor) {
  if (is_state_level(report.family)) throw std::invalid_argument("refine_near_equality: grid families only");
  if (factor < 1) throw std::invalid_argument("refine_near_equality: factor must be >= 1");
  if (report.argmin.size() != report.grid.size() || report.spacing.size() != report.grid.size()) {
    throw std::invalid_argument("refine_near_equality: report carries no grid");
  }
  std::vector<std::vector<double>> axes;
  std::vector<double> spacing;
  for (std::size_t k = 0; k < report.grid.size(); ++k) {
    const double centre = report.argmin[k];
    const double h = report.spacing[k] / factor;
    std::vector<double> vals;
    for (int j = -factor; j <= factor; ++j) {
      const double v = j == 0 ? centre : centre + j * h;
      if (v >= report.grid[k].min && v <= report.grid[k].max) vals.push_back(v);
    }
    axes.push_back(std::move(vals));
    spacing.push_back(h);
  }
  Accumulator acc(report.family, report.tolerance);
  for_each_point(axes, [&](const std::vector<double>& pt) {
    if (auto m = family_margin(report.family, pt)) acc.add(pt, *m);
  });
  SweepReport out = std::move(acc).finish();
  out.grid = report.grid;
  out.spacing = std::move(spacing);
  return out;
}

StateCheckSpec default_state_check(Family f) {
  StateCheckSpec s;
  s.family = f;
  switch (f) {
    case Family::CKW: break;
    case Family::Remark1:
      s.indices = {2.0, 2.5, 3.0};
      s.exponents = {1.0, 1.5, 2.0, 3.0};
      break;
    case Family::Remark2:
      s.indices = {2.0, 3.0};
      s.exponents = {1.0, 1.5, 2.0, 3.0};
      break;
    case Family::Remark3:
      s.indices = {kRenyiWindowMin, 1.5};
      s.exponents = {2.0, 3.0, 4.0};
      break;
    default: throw std::invalid_argument("default_state_check: not a state-level family");
  }
  return s;
}

namespace {

struct Marginals {
  ComplexMatrix ab, ac;
};

Marginals marginals(const PureState& s) {
  const ComplexMatrix rho = density(s);
  return {partial_trace(rho, 3, {0, 1}), partial_trace(rho, 3, {0, 2})};
}

void check_state_params(Family f, double index, double exponent) {
  switch (f) {
    case Family::CKW: return;
    case Family::Remark1:
      if (!(index >= 2.0 && index <= 3.0)) throw std::domain_error("remark1: q must lie in [2, 3]");
      if (!(exponent >= 1.0)) throw std::domain_error("remark1: eta must be >= 1");
      return;
    case Family::Remark2:
      if (!(index >= 2.0)) throw std::domain_error("remark2: alpha must be >= 2");
      if (!(exponent >= 1.0)) throw std::domain_error("remark2: mu must be >= 1");
      return;
    case Family::Remark3:
      if (!(index >= kRenyiWindowMin && index < 2.0)) {
        throw std::domain_error("remark3: alpha must lie in [(sqrt(7)-1)/2, 2)");
      }
      if (!(exponent >= 2.0)) throw std::domain_error("remark3: gamma must be >= 2");
      return;
    default: throw std::invalid_argument("state check: " + std::string(family_id(f)) + " is not state-level");
  }
}

}  // namespace

double state_margin(Family f, const PureState& state, double index, double exponent) {
  if (state.n_qubits() != 3) throw std::invalid_argument("state_margin: expected a three-qubit state");
  check_state_params(f, index, exponent);
  const Marginals m = marginals(state);
  switch (f) {
    case Family::CKW: {
      const double whole = concurrence_pure(state, {0});
      const double cab = concurrence_two_qubit(m.ab), cac = concurrence_two_qubit(m.ac);
      return whole * whole - cab * cab - cac * cac;
    }
    case Family::Remark1: {
      const TsallisParam q(index);
      const double lhs = std::pow(tsallis_pure(state, {0}, q), exponent);
      const double e1 = tsallis_two_qubit(m.ab, q), e2 = tsallis_two_qubit(m.ac, q);
      return lhs - pair_bound(std::max(e1, e2), std::min(e1, e2), PowerParam::linear(exponent), Coupling::Linear);
    }
    case Family::Remark2: {
      const RenyiParam a(index);
      const double lhs = std::pow(renyi_pure(state, {0}, a), exponent);
      const double e1 = renyi_two_qubit(m.ab, a), e2 = renyi_two_qubit(m.ac, a);
      return lhs - pair_bound(std::max(e1, e2), std::min(e1, e2), PowerParam::linear(exponent), Coupling::Linear);
    }
    case Family::Remark3: {
      const RenyiParam a(index);
      const double lhs = std::pow(renyi_pure(state, {0}, a), exponent);
      const double e1 = renyi_two_qubit(m.ab, a), e2 = renyi_two_qubit(m.ac, a);
      return lhs - pair_bound(std::max(e1, e2), std::min(e1, e2), PowerParam::squared(exponent), Coupling::Squared);
    }
    default: break;
  }
  throw std::invalid_argument("state_margin: not a state-level family");
}

SweepReport run_state_check(const StateCheckSpec& spec) {
  if (!is_state_level(spec.family)) {
    throw std::invalid_argument("run_state_check: " + std::string(family_id(spec.family)) + " is a grid family");
  }
  if (spec.n_states < 1) throw std::invalid_argument("run_state_check: need at least one state");
  if (!(spec.tolerance > 0.0)) throw std::invalid_argument("run_state_check: tolerance must be positive");
  std::vector<double> indices = spec.indices, exponents = spec.exponents;
  if (spec.family == Family::CKW) {
    indices = {0.0};
    exponents = {0.0};
  } else if (indices.empty() || exponents.empty()) {
    throw std::invalid_argument("run_state_check: index and exponent lists must be nonempty");
  }
  for (double i : indices) {
    for (double e : exponents) check_state_params(spec.family, i, e);
  }

  Accumulator acc(spec.family, spec.tolerance);
  Rng rng(spec.seed);
  for (int s = 0; s < spec.n_states; ++s) {
    const PureState state = random_pure_state(3, rng);
    for (double i : indices) {
      for (double e : exponents) {
        acc.add({static_cast<double>(s), i, e}, state_margin(spec.family, state, i, e));
      }
    }
  }
  return std::move(acc).finish();
}

std::string to_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["family"] = std::string(family_id(r.family));
  j["points"] = r.points;
  j["min_margin"] = r.min_margin;
  j["argmin"] = r.argmin;
  auto violations = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"point", v.point}, {"margin", v.margin}});
  }
  j["violations"] = std::move(violations);
  j["violation_count"] = r.violation_count;
  j["tolerance"] = r.tolerance;
  return j.dump(2);
}

}  // namespace monogamy
