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

#include "monogamy/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monogamy/bounds.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/ordering.hpp"
#include "monogamy/reference.hpp"
#include "monogamy/verify.hpp"

namespace monogamy::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kOutDirEnv = "MONOGAMY_OUT_DIR";
constexpr std::array<const char*, 5> kAxisNames{"x", "y", "q", "alpha", "mu"};

std::string fixed5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

struct AxisFlags {
  std::optional<double> min, max;
  std::optional<int> steps;
};

struct SweepArgs {
  std::string family;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<int> states;
  std::optional<int> samples;
  std::optional<int> steps;
  std::vector<double> indices, exponents;
  std::map<std::string, AxisFlags> axes;
};

struct EvaluateArgs {
  std::string state_file;
  std::string measure;
  double index = 0.0;
  double exponent = 1.0;
  int pivot = 0;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_figure(int which, std::string out_path, std::ostream& out, std::ostream& err) {
  const FigureSpec spec = figure_spec(which);
  if (out_path.empty()) {
    const char* dir = std::getenv(kOutDirEnv);
    out_path = (std::filesystem::path(dir && *dir ? dir : ".") / ("figure" + std::to_string(which) + ".csv")).string();
  }
  const auto rows = figure_rows(spec);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "figure: cannot open " << out_path << " for writing\n";
    return kExitUsage;
  }
  write_figure_csv(file, rows);
  file.close();
  if (!file) {
    err << "figure: write to " << out_path << " failed\n";
    return kExitUsage;
  }
  int bad = 0;
  for (const auto& r : rows) {
    if (r.lhs - r.new_bound < -kBoundTolerance || r.new_bound - r.prior_bound < -kBoundTolerance) {
      err << "figure " << which << ": ordering lhs >= new >= prior fails at exponent " << fixed5(r.exponent) << "\n";
      ++bad;
    }
  }
  out << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return bad == 0 ? kExitOk : kExitRegression;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto family = parse_family(a.family);
  if (!family) throw UsageError("sweep: unknown family '" + a.family + "'");

  SweepReport report;
  if (is_state_level(*family)) {
    for (const auto& [name, flags] : a.axes) {
      if (flags.min || flags.max || flags.steps) throw UsageError("sweep: --" + name + "-* flags need a grid family");
    }
    if (a.samples || a.steps) throw UsageError("sweep: --samples/--steps need a grid family");
    StateCheckSpec spec = default_state_check(*family);
    if (a.seed) spec.seed = *a.seed;
    if (a.tolerance) spec.tolerance = *a.tolerance;
    if (a.states) spec.n_states = *a.states;
    if (!a.indices.empty()) spec.indices = a.indices;
    if (!a.exponents.empty()) spec.exponents = a.exponents;
    if (*family == Family::CKW && (!a.indices.empty() || !a.exponents.empty())) {
      throw UsageError("sweep: ckw takes no --indices/--exponents");
    }
    report = run_state_check(spec);
  } else {
    if (a.states) throw UsageError("sweep: --states needs a state-level family");
    if (!a.indices.empty() || !a.exponents.empty()) throw UsageError("sweep: --indices/--exponents need a state-level family");
    SweepSpec spec = default_sweep(*family);
    const auto names = axis_names(*family);
    for (const auto& [name, flags] : a.axes) {
      const bool used = flags.min || flags.max || flags.steps;
      if (used && std::find(names.begin(), names.end(), name) == names.end()) {
        throw UsageError("sweep: family " + a.family + " has no axis '" + name + "'");
      }
    }
    for (auto& axis : spec.grid) {
      if (a.steps) axis.steps = *a.steps;
      const auto it = a.axes.find(axis.name);
      if (it == a.axes.end()) continue;
      if (it->second.min) axis.min = *it->second.min;
      if (it->second.max) axis.max = *it->second.max;
      if (it->second.steps) axis.steps = *it->second.steps;
    }
    if (a.seed) spec.seed = *a.seed;
    if (a.tolerance) spec.tolerance = *a.tolerance;
    if (a.samples) spec.random_samples = *a.samples;
    report = run_sweep(spec);
  }
  out << to_json(report) << "\n";
  return report.clean() ? kExitOk : kExitRegression;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read state file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out) {
  const PureState state = parse_state_json(read_file(a.state_file));
  const int n = state.n_qubits();
  if (n < 3 || n > 4) throw std::invalid_argument("evaluate: state must have 3 or 4 qubits");
  if (a.pivot < 0 || a.pivot >= n) throw std::invalid_argument("evaluate: pivot out of range");

  Regime regime;
  std::optional<PowerParam> power;
  if (a.measure == "tsallis") {
    const TsallisParam q(a.index);
    if (!q.superadditive()) throw std::domain_error("evaluate: Tsallis bounds need 2 <= q <= 3");
    if (!(a.exponent >= 1.0)) throw std::domain_error("evaluate: Tsallis bounds need eta >= 1");
    regime = Regime::TsallisQ2to3;
    power = PowerParam::linear(a.exponent);
  } else {
    const RenyiParam alpha(a.index);
    const RenyiRegime rr = alpha.regime();
    if (rr == RenyiRegime::AlphaGE2) {
      if (!(a.exponent >= 1.0)) throw std::domain_error("evaluate: Renyi bounds with alpha >= 2 need mu >= 1");
      regime = Regime::RenyiGE2;
      power = PowerParam::linear(a.exponent);
    } else {
      if (!(a.exponent >= 2.0)) throw std::domain_error("evaluate: Renyi bounds with alpha < 2 need gamma >= 2");
      regime = Regime::RenyiWindow;
      power = PowerParam::squared(a.exponent);
    }
  }

  const ComplexMatrix rho = density(state);
  std::vector<int> rest;
  std::vector<double> pair_c(static_cast<std::size_t>(n), 0.0);
  std::vector<ComplexMatrix> pair_rho(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j == a.pivot) continue;
    rest.push_back(j);
    pair_rho[j] = partial_trace<double>(rho, n, std::array<int, 2>{std::min(a.pivot, j), std::max(a.pivot, j)});
    pair_c[j] = concurrence_two_qubit(pair_rho[j]);
  }
  std::stable_sort(rest.begin(), rest.end(), [&](int x, int y) { return pair_c[x] > pair_c[y]; });

  auto entanglement = [&](int j) {
    if (regime == Regime::TsallisQ2to3) return tsallis_two_qubit(pair_rho[j], TsallisParam(a.index));
    return renyi_two_qubit(pair_rho[j], RenyiParam(a.index));
  };
  const double whole = regime == Regime::TsallisQ2to3 ? tsallis_pure(state, {a.pivot}, TsallisParam(a.index))
                                                      : renyi_pure(state, {a.pivot}, RenyiParam(a.index));
  std::vector<double> values;
  for (int j : rest) values.push_back(entanglement(j));
  const double lhs = std::pow(whole, a.exponent);

  const BoundReport report = n == 3 ? compare_bounds(lhs, values[0], values[1], *power, regime)
                                    : compare_chain(lhs, values, n - 2, *power, regime);
  const auto positions = ordering_certificate(state, a.pivot, rest);

  ordered_json j;
  j["measure"] = a.measure;
  j["index"] = a.index;
  j["exponent"] = a.exponent;
  j["pivot"] = a.pivot;
  j["n_qubits"] = n;
  j["regime"] = regime == Regime::TsallisQ2to3 ? "tsallis" : regime == Regime::RenyiGE2 ? "renyi-alpha-ge-2" : "renyi-window";
  j["rest_order"] = rest;
  j["pair_values"] = values;
  j["lhs"] = report.lhs;
  j["new_bound"] = report.new_bound;
  j["prior_bound"] = report.prior_bound;
  j["naive_bound"] = report.naive_bound;
  j["margins"] = {{"lhs_minus_new", report.margins[0]},
                  {"new_minus_prior", report.margins[1]},
                  {"prior_minus_naive", report.margins[2]}};
  j["ordering"] = std::string(to_string(overall(positions)));
  j["consistent"] = report.consistent();
  out << j.dump(2) << "\n";
  return report.consistent() ? kExitOk : kExitRegression;
}

}  // namespace

int report_example(const ExampleResult& r, std::ostream& out) {
  out << "example " << r.which << ": " << r.measure << " entanglement, index " << fixed5(r.index) << "\n";
  out << "cut     computed  reference  abs diff\n";
  bool ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const double diff = std::abs(r.computed[i] - r.expected[i]);
    const bool row_ok = diff <= reference::kRegressionTolerance;
    ok = ok && row_ok;
    char line[96];
    std::snprintf(line, sizeof line, "%-6s  %.5f   %.5f    %.1e%s\n", r.labels[i].c_str(), r.computed[i],
                  r.expected[i], diff, row_ok ? "" : "  MISMATCH");
    out << line;
  }
  out << (ok ? "ok" : "mismatch beyond 1e-05") << "\n";
  return ok ? kExitOk : kExitRegression;
}

PureState parse_state_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("state JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("state JSON: expected an object");
  try {
    if (j.contains("lambda")) {
      AcinParams p;
      const auto lambda = j.at("lambda").get<std::vector<double>>();
      if (lambda.size() != 5) throw std::invalid_argument("state JSON: lambda needs 5 entries");
      std::copy(lambda.begin(), lambda.end(), p.lambda.begin());
      p.phi = j.value("phi", 0.0);
      return acin_state(p);
    }
    const int n = j.at("n_qubits").get<int>();
    if (n < 1 || n > 8) throw std::invalid_argument("state JSON: n_qubits out of range");
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != (std::size_t{1} << n)) {
      throw std::invalid_argument("state JSON: amplitudes must have 2^n_qubits entries");
    }
    ComplexVector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
      const auto& pair = amps[i];
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("state JSON: amplitude must be [re, im]");
      v(static_cast<Eigen::Index>(i)) = {pair[0].get<double>(), pair[1].get<double>()};
    }
    return PureState(n, std::move(v));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("state JSON: ") + e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement monogamy bounds: examples, figure data, sweeps and state evaluation", "monogamy"};
  app.require_subcommand(1);

  int example_id = 0;
  auto* example = app.add_subcommand("example", "Recompute an example and compare with the published values");
  example->add_option("which", example_id, "1, 2 or 3")->required()->check(CLI::Range(1, 3));

  int figure_id = 0;
  std::string figure_out;
  auto* figure = app.add_subcommand("figure", "Write the CSV data behind a figure");
  figure->add_option("which", figure_id, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  figure->add_option("--out", figure_out, std::string("Output CSV path (default $") + kOutDirEnv + "/figureN.csv)");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Sweep an inequality family and print a JSON report");
  sweep->add_option("family", sw.family, "lemma1, gq-super, falpha-add, falpha-sq-add, lemma2, lemma5, lemma6, ckw, "
                                         "remark1, remark2, remark3")
      ->required();
  sweep->add_option("--seed", sw.seed, "Random seed");
  sweep->add_option("--tolerance", sw.tolerance, "Violation tolerance");
  sweep->add_option("--states", sw.states, "Number of random states (state-level families)");
  sweep->add_option("--samples", sw.samples, "Extra uniform samples (grid families)");
  sweep->add_option("--steps", sw.steps, "Steps on every axis (grid families)");
  sweep->add_option("--indices", sw.indices, "q or alpha values (state-level families)")->delimiter(',');
  sweep->add_option("--exponents", sw.exponents, "Exponent values (state-level families)")->delimiter(',');
  for (const char* name : kAxisNames) {
    auto& f = sw.axes[name];
    const std::string n(name);
    sweep->add_option("--" + n + "-min", f.min, "Lower end of the " + n + " axis");
    sweep->add_option("--" + n + "-max", f.max, "Upper end of the " + n + " axis");
    sweep->add_option("--" + n + "-steps", f.steps, "Steps on the " + n + " axis");
  }

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Evaluate the bounds on a pure state read from JSON");
  evaluate->add_option("--state", ev.state_file, "State JSON file")->required();
  evaluate->add_option("--measure", ev.measure, "tsallis or renyi")
      ->required()
      ->check(CLI::IsMember({"tsallis", "renyi"}));
  evaluate->add_option("--index", ev.index, "q or alpha")->required();
  evaluate->add_option("--exponent", ev.exponent, "eta, mu or gamma")->required();
  evaluate->add_option("--pivot", ev.pivot, "Pivot qubit");

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*example) return report_example(run_example(example_id), out);
    if (*figure) return cmd_figure(figure_id, figure_out, out, err);
    if (*sweep) return cmd_sweep(sw, out);
    if (*evaluate) return cmd_evaluate(ev, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace monogamy::cli
