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

#include "monogamy/bounds.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace monogamy {

namespace {

// x^a with x^0 = 1 for every x >= 0, so mu = 1 collapses are exact.
double power(double x, double a) { return a == 0.0 ? 1.0 : std::pow(x, a); }

void require_ordered(double e1, double e2, const char* who) {
  if (!(e2 >= 0.0)) throw std::invalid_argument(std::string(who) + ": values must be non-negative");
  if (e1 < e2) {
    std::ostringstream msg;
    msg << who << ": requires e1 >= e2 (got " << e1 << " < " << e2 << "); order the pair first";
    throw std::invalid_argument(msg.str());
  }
}

double gamma_of(const PowerParam& p, const char* who) {
  if (!p.gamma()) throw std::invalid_argument(std::string(who) + ": squared coupling needs gamma");
  return *p.gamma();
}

double pow_of(const PowerParam& p, Coupling coupling) {
  return coupling == Coupling::Linear ? p.mu() : gamma_of(p, "bound");
}

double new_tail(double a, double b, const PowerParam& p, Coupling coupling) {
  const double k = p.cross_coefficient();
  const double c = std::exp2(p.mu()) - k - 1.0;
  if (coupling == Coupling::Linear) {
    const double mu = p.mu();
    return power(a, mu) + k * power(a, mu - 1.0) * b + c * power(b, mu);
  }
  const double g = gamma_of(p, "pair_bound");
  return power(a, g) + k * power(a, g - 2.0) * b * b + c * power(b, g);
}

double prior_tail(double a, double b, const PowerParam& p, PriorFamily family) {
  switch (family) {
    case PriorFamily::Tsallis: {
      const double n = p.mu();
      return power(a, n) + (std::exp2(n) - 1.0) * power(b, n) + n / 2.0 * b * (power(a, n - 1.0) - power(b, n - 1.0));
    }
    case PriorFamily::RenyiLinear: {
      const double mu = p.mu();
      return power(a, mu) + mu / 2.0 * power(a, mu - 1.0) * b + (std::exp2(mu) - mu / 2.0 - 1.0) * power(b, mu);
    }
    case PriorFamily::RenyiSquared: {
      const double g = gamma_of(p, "prior_pair_bound");
      return power(a, g) + g / 4.0 * power(a, g - 2.0) * b * b + (std::exp2(g / 2.0) - g / 4.0 - 1.0) * power(b, g);
    }
  }
  throw std::logic_error("prior_tail: unknown family");
}

double naive_tail(double a, double b, const PowerParam& p, Coupling coupling) {
  const double e = pow_of(p, coupling);
  return power(a, e) + p.h() * power(b, e);
}

using Tail = std::function<double(double, double)>;

double chain(std::span<const double> v, int m, double exponent, double h, const Tail& tail) {
  const int len = static_cast<int>(v.size());  // N - 1
  if (len < 2) throw std::invalid_argument("chain_bound: need at least two pair values");
  if (m < 0 || m > len - 1) {
    std::ostringstream msg;
    msg << "chain_bound: split index " << m << " outside [0, " << len - 1 << "]";
    throw std::invalid_argument(msg.str());
  }
  for (double x : v) {
    if (!(x >= 0.0)) throw std::invalid_argument("chain_bound: values must be non-negative");
  }
  double acc = 0.0;
  if (m == len - 1) {
    double hp = 1.0;
    for (int i = 0; i < len - 2; ++i, hp *= h) acc += hp * power(v[i], exponent);
    return acc + hp * tail(v[len - 2], v[len - 1]);
  }
  double hp = 1.0;
  for (int i = 0; i < m; ++i, hp *= h) acc += hp * power(v[i], exponent);
  // hp == h^m here.
  double middle = 0.0;
  for (int j = m; j < len - 2; ++j) middle += power(v[j], exponent);
  return acc + hp * h * middle + hp * tail(v[len - 1], v[len - 2]);
}

void require_mu(double mu) {
  if (!(mu >= 1.0) || !std::isfinite(mu)) {
    std::ostringstream msg;
    msg << "exponent mu = " << mu << " must be >= 1";
    throw std::domain_error(msg.str());
  }
}

}  // namespace

PowerParam PowerParam::linear(double mu) {
  require_mu(mu);
  return PowerParam(mu, std::nullopt);
}

PowerParam PowerParam::squared(double gamma) {
  require_mu(gamma / 2.0);
  return PowerParam(gamma / 2.0, gamma);
}

Coupling coupling_for(Regime r) { return r == Regime::RenyiWindow ? Coupling::Squared : Coupling::Linear; }

PriorFamily prior_for(Regime r) {
  switch (r) {
    case Regime::TsallisQ2to3: return PriorFamily::Tsallis;
    case Regime::RenyiGE2: return PriorFamily::RenyiLinear;
    case Regime::RenyiWindow: return PriorFamily::RenyiSquared;
  }
  throw std::logic_error("prior_for: unknown regime");
}

PowerChain power_chain(double x, double mu) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("power_chain: x must lie in [0, 1]");
  require_mu(mu);
  const double k = mu * mu / (mu + 1.0);
  const double two_mu = std::exp2(mu);
  const double xm = power(x, mu);
  return {
      std::pow(1.0 + x, mu),
      1.0 + k * x + (two_mu - k - 1.0) * xm,
      1.0 + mu / 2.0 * x + (two_mu - mu / 2.0 - 1.0) * xm,
      1.0 + (two_mu - 1.0) * xm,
  };
}

double pair_bound(double e1, double e2, const PowerParam& p, Coupling coupling) {
  require_ordered(e1, e2, "pair_bound");
  return new_tail(e1, e2, p, coupling);
}

double prior_pair_bound(double e1, double e2, const PowerParam& p, PriorFamily family) {
  require_ordered(e1, e2, "prior_pair_bound");
  return prior_tail(e1, e2, p, family);
}

double naive_pair_bound(double e1, double e2, const PowerParam& p, Coupling coupling) {
  require_ordered(e1, e2, "naive_pair_bound");
  return naive_tail(e1, e2, p, coupling);
}

double chain_bound(std::span<const double> values, int m, const PowerParam& p, Coupling coupling) {
  return chain(values, m, pow_of(p, coupling), p.h(),
               [&](double a, double b) { return new_tail(a, b, p, coupling); });
}

double chain_bound_prior(std::span<const double> values, int m, const PowerParam& p, PriorFamily family) {
  const Coupling coupling = family == PriorFamily::RenyiSquared ? Coupling::Squared : Coupling::Linear;
  return chain(values, m, pow_of(p, coupling), p.h(),
               [&](double a, double b) { return prior_tail(a, b, p, family); });
}

double chain_bound_naive(std::span<const double> values, int m, const PowerParam& p, Coupling coupling) {
  return chain(values, m, pow_of(p, coupling), p.h(),
               [&](double a, double b) { return naive_tail(a, b, p, coupling); });
}

bool BoundReport::consistent(double tol) const {
  return margins[0] >= -tol && margins[1] >= -tol && margins[2] >= -tol;
}

namespace {

BoundReport finish(double lhs, double exponent, double nb, double pb, double vb) {
  BoundReport r;
  r.exponent = exponent;
  r.lhs = lhs;
  r.new_bound = nb;
  r.prior_bound = pb;
  r.naive_bound = vb;
  r.margins = {lhs - nb, nb - pb, pb - vb};
  return r;
}

}  // namespace

BoundReport compare_bounds(double lhs, double e1, double e2, const PowerParam& p, Regime regime) {
  const Coupling c = coupling_for(regime);
  return finish(lhs, pow_of(p, c), pair_bound(e1, e2, p, c), prior_pair_bound(e1, e2, p, prior_for(regime)),
                naive_pair_bound(e1, e2, p, c));
}

BoundReport compare_chain(double lhs, std::span<const double> values, int m, const PowerParam& p, Regime regime) {
  const Coupling c = coupling_for(regime);
  return finish(lhs, pow_of(p, c), chain_bound(values, m, p, c), chain_bound_prior(values, m, p, prior_for(regime)),
                chain_bound_naive(values, m, p, c));
}

}  // namespace monogamy
