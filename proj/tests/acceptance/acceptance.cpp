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

// Acceptance suite: one PASS/FAIL line per criterion, tolerances and time limits pinned.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "monogamy/bounds.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/ordering.hpp"
#include "monogamy/random.hpp"
#include "monogamy/reference.hpp"
#include "monogamy/reproduce.hpp"
#include "monogamy/roof_oracle.hpp"
#include "monogamy/verify.hpp"

using namespace monogamy;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || dt < limit_s;
  const bool pass = o.pass && in_time;
  failures += !pass;
  char timing[96];
  if (limit_s > 0) {
    std::snprintf(timing, sizeof timing, "%.3f s (limit %.0f s)", dt, limit_s);
  } else {
    std::snprintf(timing, sizeof timing, "%.3f s", dt);
  }
  std::printf("[%s] %-4s %s: %s; %s\n", pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), o.detail.c_str(), timing);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome example_check(int which) {
  const ExampleResult r = run_example(which);
  double worst = 0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(r.computed[i] - r.expected[i]));
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.5f / %.5f / %.5f, max |diff| %.1e (tol 1e-5)", r.computed[0], r.computed[1],
                r.computed[2], worst);
  return {worst <= reference::kRegressionTolerance, buf};
}

// ---- criterion 4 -----------------------------------------------------------

double mu_of(const FigureSpec& spec, double exponent) {
  return spec.regime == Regime::RenyiWindow ? exponent / 2.0 : exponent;
}

void figure_checks(int which) {
  const FigureSpec spec = figure_spec(which);
  const std::string id = "4." + std::to_string(which);
  std::vector<FigureRow> rows;
  criterion(id + "a", "figure " + std::to_string(which) + " rows satisfy lhs >= new >= prior (margin >= -1e-12)", 2.0,
            [&] {
              rows = figure_rows(spec);
              double worst = 1e300;
              for (const auto& r : rows) worst = std::min({worst, r.lhs - r.new_bound, r.new_bound - r.prior_bound});
              return Outcome{worst >= -1e-12, std::to_string(rows.size()) + " rows, min margin " + fmt("%.3e", worst)};
            });
  criterion(id + "b", "figure " + std::to_string(which) + " strict new > prior wherever mu > 1", 0, [&] {
    int strict_rows = 0, bad = 0;
    double smallest = 1e300;
    for (const auto& r : rows) {
      if (mu_of(spec, r.exponent) <= 1.0 + 1e-12) continue;
      ++strict_rows;
      smallest = std::min(smallest, r.new_bound - r.prior_bound);
      bad += !(r.new_bound > r.prior_bound);
    }
    return Outcome{bad == 0 && strict_rows > 0, std::to_string(strict_rows) + " rows, smallest gap " + fmt("%.3e", smallest)};
  });
  if (which == 3) return;  // the gamma grid starts at 2; there is no exponent-1 row
  criterion(id + "c", "figure " + std::to_string(which) + " at exponent 1 lhs, new, prior coincide within 1e-9", 0, [&] {
    const FigureRow& r = rows.front();
    const double spread = std::max({r.lhs, r.new_bound, r.prior_bound}) - std::min({r.lhs, r.new_bound, r.prior_bound});
    char buf[160];
    std::snprintf(buf, sizeof buf, "lhs %.5f new %.5f prior %.5f, spread %.3e", r.lhs, r.new_bound, r.prior_bound, spread);
    return Outcome{spread <= 1e-9, buf};
  });
  criterion(id + "d", "figure " + std::to_string(which) + " at exponent 1 new and prior coincide within 1e-9", 0, [&] {
    const FigureRow& r = rows.front();
    const double d = std::abs(r.new_bound - r.prior_bound);
    return Outcome{d <= 1e-9, "|new - prior| " + fmt("%.3e", d)};
  });
}

// N = 4 chain: formula-level dominance and validity under the ordering hypothesis.
Outcome chain_dominance() {
  Rng rng(4040);
  long checked = 0;
  double worst_dom = 1e300, worst_valid = 1e300;
  for (int i = 0; i < 20000; ++i) {
    // c1^2 >= c2^2 + c3^2, c2 >= c3, total squared concurrence <= 1
    const double total = rng.uniform();
    const double c1sq = total * rng.uniform(0.5, 1.0);
    const double rest = total - c1sq;
    const double c2sq = rest * rng.uniform(0.5, 1.0), c3sq = rest - c2sq;
    const double c[3] = {std::sqrt(c1sq), std::sqrt(c2sq), std::sqrt(c3sq)};
    const double mu = rng.uniform(1.0, 4.0);

    const TsallisParam q(rng.uniform(2.0, 3.0));
    const std::vector<double> t{g_q(c1sq, q), g_q(c2sq, q), g_q(c3sq, q)};
    const PowerParam lin = PowerParam::linear(mu);
    const BoundReport rt = compare_chain(std::pow(g_q(total, q), mu), t, 2, lin, Regime::TsallisQ2to3);

    const RenyiParam a2(rng.uniform(2.0, 4.0));
    const std::vector<double> e{f_alpha(c[0], a2), f_alpha(c[1], a2), f_alpha(c[2], a2)};
    const BoundReport re = compare_chain(std::pow(f_alpha(std::sqrt(total), a2), mu), e, 2, lin, Regime::RenyiGE2);

    const RenyiParam aw(rng.uniform(kRenyiWindowMin, 1.999));
    const std::vector<double> w{f_alpha(c[0], aw), f_alpha(c[1], aw), f_alpha(c[2], aw)};
    const PowerParam sq = PowerParam::squared(2.0 * mu);
    const BoundReport rw = compare_chain(std::pow(f_alpha(std::sqrt(total), aw), 2.0 * mu), w, 2, sq, Regime::RenyiWindow);

    for (const BoundReport* r : {&rt, &re, &rw}) {
      worst_valid = std::min(worst_valid, r->margins[0]);
      worst_dom = std::min({worst_dom, r->margins[1], r->margins[2]});
      ++checked;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%ld chains, min(new - prior, prior - naive) %.3e, min(lhs - new) %.3e", checked,
                worst_dom, worst_valid);
  return {worst_dom >= -1e-12 && worst_valid >= -1e-12, buf};
}

// Four-qubit pure states: whenever the ordering is certified the chain bound holds.
// Haar states rarely satisfy the hypothesis, so most samples are a|0000> + b|1100> +
// c|1010> + d|1001> with b >= c >= d plus a small generic perturbation.
Outcome certified_pathway() {
  Rng rng(4141);
  int counts[3] = {0, 0, 0};
  double worst = 1e300;
  for (int i = 0; i < 400; ++i) {
    PureState s = random_pure_state(4, rng);
    if (i % 4 != 0) {
      ComplexVector v = ComplexVector::Zero(16);
      const double b = rng.uniform(0.3, 1.0), c = b * rng.uniform(0.0, 0.6), d = c * rng.uniform();
      v(0) = rng.uniform(0.3, 1.0);
      v(12) = b;
      v(10) = c;
      v(9) = d;
      for (int k = 0; k < 16; ++k) v(k) += 0.05 * rng.complex_normal();
      s = PureState::normalized(4, v);
    }
    const ComplexMatrix rho = density(s);
    std::vector<int> rest{1, 2, 3};
    double pc[4] = {0, 0, 0, 0};
    for (int j : rest) pc[j] = concurrence_two_qubit(partial_trace<double>(rho, 4, std::array<int, 2>{0, j}));
    std::sort(rest.begin(), rest.end(), [&](int a, int b) { return pc[a] > pc[b]; });
    const Ordering o = overall(ordering_certificate(s, 0, rest));
    ++counts[static_cast<int>(o)];
    if (o != Ordering::Certified) continue;

    const double mu = rng.uniform(1.0, 3.0);
    const TsallisParam q(rng.uniform(2.0, 3.0));
    const RenyiParam a2(rng.uniform(2.0, 4.0)), aw(rng.uniform(kRenyiWindowMin, 1.999));
    std::vector<double> t, e, w;
    for (int j : rest) {
      t.push_back(g_q(pc[j] * pc[j], q));
      e.push_back(f_alpha(pc[j], a2));
      w.push_back(f_alpha(pc[j], aw));
    }
    const PowerParam lin = PowerParam::linear(mu), sq = PowerParam::squared(2 * mu);
    const BoundReport rt = compare_chain(std::pow(tsallis_pure(s, {0}, q), mu), t, 2, lin, Regime::TsallisQ2to3);
    const BoundReport re = compare_chain(std::pow(renyi_pure(s, {0}, a2), mu), e, 2, lin, Regime::RenyiGE2);
    const BoundReport rw = compare_chain(std::pow(renyi_pure(s, {0}, aw), 2 * mu), w, 2, sq, Regime::RenyiWindow);
    worst = std::min({worst, rt.margins[0], re.margins[0], rw.margins[0]});
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "certified %d, violated %d, undetermined %d; min lhs - new on certified %.3e",
                counts[0], counts[1], counts[2], counts[0] ? worst : 0.0);
  return {counts[0] >= 100 && worst >= -1e-9, buf};
}

// ---- criterion 5 -----------------------------------------------------------

double y_zero_worst(Family f, const SweepSpec& s) {
  double worst = 0;
  std::vector<std::vector<double>> axes;
  for (const auto& a : s.grid) axes.push_back(a.values());
  for (double x : axes[0]) {
    if (axes.size() == 3) {
      for (double i : axes[2]) worst = std::max(worst, std::abs(*family_margin(f, std::vector<double>{x, 0.0, i})));
    } else {
      for (double i : axes[2])
        for (double m : axes[3]) worst = std::max(worst, std::abs(*family_margin(f, std::vector<double>{x, 0.0, i, m})));
    }
  }
  return worst;
}

std::string describe(const SweepReport& r) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "%s: %ld points, min margin %.3e, %ld violations", std::string(family_id(r.family)).c_str(),
                r.points, r.min_margin, r.violation_count);
  return buf;
}

Outcome lemma_sweeps() {
  bool ok = true;
  std::string detail;
  for (Family f : all_families()) {
    if (is_state_level(f)) continue;
    SweepSpec s = default_sweep(f);
    if (f == Family::GqSuper) s.grid[2].steps = 11;  // q in {2, 2.1, ..., 3}
    const SweepReport r = run_sweep(s);
    ok = ok && r.clean() && r.min_margin >= -1e-12;
    bool equality;
    std::string where;
    if (f == Family::Lemma1) {
      equality = r.argmin[0] == 1.0 && std::abs(r.min_margin) <= 1e-12;
      where = "argmin x = " + fmt("%.3f", r.argmin[0]);
    } else {
      const double w = y_zero_worst(f, s);
      equality = w <= 1e-12 && std::abs(r.min_margin) <= 1e-12;
      where = "max |margin| on y = 0 " + fmt("%.1e", w);
    }
    ok = ok && equality;
    std::printf("       %s, %s%s\n", describe(r).c_str(), where.c_str(), equality ? "" : " (equality not detected)");
  }
  detail = "seven grid families, tolerance 1e-12";
  return {ok, detail};
}

// ---- criterion 6 -----------------------------------------------------------

Outcome state_suite() {
  bool ok = true;
  long points = 0;
  for (Family f : {Family::CKW, Family::Remark1, Family::Remark2, Family::Remark3}) {
    StateCheckSpec s = default_state_check(f);
    s.n_states = 1000;
    s.seed = 20260;
    s.tolerance = 1e-9;
    const SweepReport r = run_state_check(s);
    ok = ok && r.clean() && r.min_margin >= -1e-9;
    points += r.points;
    std::printf("       %s\n", describe(r).c_str());
  }
  return {ok, std::to_string(points) + " state/parameter evaluations, tolerance 1e-9"};
}

// ---- criterion 7 -----------------------------------------------------------

Outcome oracle_equivalence() {
  Rng rng(7007);
  double worst_mixed = 0, worst_pure = 0;
  for (int i = 0; i < 100; ++i) {
    const double p = rng.uniform();
    const ComplexMatrix rho = p * density(random_pure_state(2, rng)) + (1.0 - p) * density(random_pure_state(2, rng));
    worst_mixed = std::max(worst_mixed, std::abs(concurrence_roof_oracle(rho, 20, i) - concurrence_two_qubit(rho)));
  }
  for (int i = 0; i < 100; ++i) {
    const ComplexMatrix rho = density(random_pure_state(2, rng));
    worst_pure = std::max(worst_pure, std::abs(concurrence_roof_oracle(rho, 5, i) - concurrence_two_qubit(rho)));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "rank-2 max |diff| %.2e (tol 2e-3), pure max |diff| %.2e (tol 1e-6)", worst_mixed,
                worst_pure);
  return {worst_mixed <= 2e-3 && worst_pure <= 1e-6, buf};
}

// ---- criterion 8 -----------------------------------------------------------

Outcome kernel_checks() {
  Rng rng(8008);
  double herm_res = 0, qr_res = 0, trace_err = 0;
  for (int dim : {2, 4, 8, 16}) {
    for (int rep = 0; rep < 10; ++rep) {
      ComplexMatrix g(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
      ComplexMatrix rho = g * g.adjoint();
      rho /= rho.trace().real();
      const Eigensystem es = hermitian_eigensystem(rho);
      const ComplexMatrix d = Eigen::VectorXd::Map(es.spectrum.values.data(), dim).cast<std::complex<double>>().asDiagonal();
      herm_res = std::max(herm_res, (es.vectors * d * es.vectors.adjoint() - rho).norm());
      for (const auto& lam : general_eigenvalues(g)) {
        const ComplexMatrix shifted = g - lam * ComplexMatrix::Identity(dim, dim);
        const double smin = Eigen::JacobiSVD<ComplexMatrix>(shifted).singularValues().minCoeff();
        qr_res = std::max(qr_res, smin / g.norm());
      }
      const int n = static_cast<int>(std::log2(dim));
      for (int q = 0; q < n; ++q) {
        trace_err = std::max(trace_err, std::abs(partial_trace(rho, n, {q}).trace() - std::complex<double>(1.0)));
      }
    }
  }
  double min_first = 1e300, min_second = 1e300;
  auto scan = [&](auto&& f) {
    constexpr int n = 1000;
    std::vector<double> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = f(static_cast<double>(i) / n);
    for (int i = 0; i < n; ++i) min_first = std::min(min_first, v[i + 1] - v[i]);
    for (int i = 1; i < n; ++i) min_second = std::min(min_second, v[i + 1] - 2 * v[i] + v[i - 1]);
  };
  for (double q : {2.0, 2.25, 2.5, 2.75, 3.0}) scan([q](double x) { return g_q(x, TsallisParam(q)); });
  for (double a : {kRenyiWindowMin, 1.5, 2.0, 3.0, 5.0}) scan([a](double x) { return f_alpha(x, RenyiParam(a)); });
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "Hermitian residual %.1e, QR relative residual %.1e (tol 1e-10); partial-trace trace error %.1e "
                "(tol 1e-12); min first diff %.1e, min second diff %.1e",
                herm_res, qr_res, trace_err, min_first, min_second);
  return {herm_res <= 1e-10 && qr_res <= 1e-10 && trace_err <= 1e-12 && min_first >= -1e-10 && min_second >= -1e-8, buf};
}

}  // namespace

int main() {
  criterion("1", "Example-1 regression, Tsallis q = 2", 1.0, [] { return example_check(1); });
  criterion("2", "Example-2 regression, Renyi alpha = 2", 1.0, [] { return example_check(2); });
  criterion("3", "Example-3 regression, Renyi alpha = (sqrt 7 - 1)/2", 1.0, [] { return example_check(3); });
  for (int f = 1; f <= 3; ++f) figure_checks(f);
  criterion("4.4", "N = 4 chain dominance and validity (formula level)", 0, chain_dominance);
  criterion("4.5", "N = 4 certified-ordering pathway on random pure states", 0, certified_pathway);
  criterion("5", "lemma sweeps with equality detection", 30.0, lemma_sweeps);
  criterion("6", "state-level property suite, 1000 states per combination", 60.0, state_suite);
  criterion("7", "convex-roof oracle vs closed-form concurrence", 120.0, oracle_equivalence);
  criterion("8", "numerical kernel checks", 0, kernel_checks);
  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
