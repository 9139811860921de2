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
#include <optional>
#include <span>
#include <vector>

namespace monogamy {

/// Absolute tolerance used when comparing bound values.
inline constexpr double kBoundTolerance = 1e-12;

/// Exponent of the monogamy relation. `mu` >= 1 is the power on linear-coupled
/// entanglement; the squared-coupled form raises to gamma = 2 mu instead.
class PowerParam {
 public:
  static PowerParam linear(double mu);
  /// gamma >= 2; mu is set to gamma / 2.
  static PowerParam squared(double gamma);

  double mu() const { return mu_; }
  std::optional<double> gamma() const { return gamma_; }
  /// 2^mu - 1.
  double h() const { return std::exp2(mu_) - 1.0; }
  /// mu^2 / (mu + 1).
  double cross_coefficient() const { return mu_ * mu_ / (mu_ + 1.0); }

 private:
  PowerParam(double mu, std::optional<double> gamma) : mu_(mu), gamma_(gamma) {}
  double mu_;
  std::optional<double> gamma_;
};

enum class Coupling { Linear, Squared };

/// Previously published pairwise bounds the new ones are measured against.
enum class PriorFamily {
  Tsallis,       ///< e1^n + (2^n - 1) e2^n + (n/2) e2 (e1^(n-1) - e2^(n-1))
  RenyiLinear,   ///< e1^mu + (mu/2) e1^(mu-1) e2 + (2^mu - mu/2 - 1) e2^mu
  RenyiSquared,  ///< e1^g + (g/4) e1^(g-2) e2^2 + (2^(g/2) - g/4 - 1) e2^g
};

enum class Regime { TsallisQ2to3, RenyiGE2, RenyiWindow };

Coupling coupling_for(Regime r);
PriorFamily prior_for(Regime r);

/// The four members of (1+x)^mu >= tight >= loose >= naive.
struct PowerChain {
  double lhs;    ///< (1 + x)^mu
  double tight;  ///< 1 + mu^2/(mu+1) x + (2^mu - mu^2/(mu+1) - 1) x^mu
  double loose;  ///< 1 + (mu/2) x + (2^mu - mu/2 - 1) x^mu
  double naive;  ///< 1 + (2^mu - 1) x^mu
};

/// Requires 0 <= x <= 1 and mu >= 1; throws std::domain_error otherwise.
PowerChain power_chain(double x, double mu);

/// New pairwise lower bound with e1 >= e2 >= 0 (throws std::invalid_argument if unordered).
///   Linear:  e1^mu + k e1^(mu-1) e2 + (2^mu - k - 1) e2^mu
///   Squared: e1^g  + k e1^(g-2) e2^2 + (2^mu - k - 1) e2^g,  k = mu^2/(mu+1), g = 2 mu.
double pair_bound(double e1, double e2, const PowerParam& p, Coupling coupling);

double prior_pair_bound(double e1, double e2, const PowerParam& p, PriorFamily family);

/// e1^pow + (2^mu - 1) e2^pow.
double naive_pair_bound(double e1, double e2, const PowerParam& p, Coupling coupling);

/// N-party bound from the per-pair entanglement values v_1..v_{N-1}.
///
/// With m = N-2 every pair dominates the remainder and the bound is
///   sum_{i<=N-3} h^(i-1) v_i^pow + h^(N-3) Q(v_{N-2}, v_{N-1});
/// for 0 <= m < N-2 the ordering flips after position m and the bound is
///   sum_{i<=m} h^(i-1) v_i^pow + h^(m+1) sum_{m<j<=N-3} v_j^pow + h^m Q(v_{N-1}, v_{N-2}).
/// Q is the pairwise tail of `pair_bound` (first argument leads). Ordering is not checked.
double chain_bound(std::span<const double> values, int m, const PowerParam& p, Coupling coupling);

/// Same chain with the prior pairwise tail.
double chain_bound_prior(std::span<const double> values, int m, const PowerParam& p, PriorFamily family);

/// Same chain with the naive tail a^pow + h b^pow.
double chain_bound_naive(std::span<const double> values, int m, const PowerParam& p, Coupling coupling);

struct BoundReport {
  double exponent = 0.0;  ///< mu (linear) or gamma (squared)
  double lhs = 0.0;
  double new_bound = 0.0;
  double prior_bound = 0.0;
  double naive_bound = 0.0;
  /// lhs - new, new - prior, prior - naive.
  std::array<double, 3> margins{};

  bool consistent(double tol = kBoundTolerance) const;
};

/// `lhs` is the whole-cut entanglement already raised to the exponent. Requires e1 >= e2.
BoundReport compare_bounds(double lhs, double e1, double e2, const PowerParam& p, Regime regime);

/// Report for an N-party chain (values.size() >= 2) at split index m.
BoundReport compare_chain(double lhs, std::span<const double> values, int m, const PowerParam& p, Regime regime);

}  // namespace monogamy
