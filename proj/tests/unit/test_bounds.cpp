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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "monogamy/bounds.hpp"
#include "monogamy/random.hpp"

using namespace monogamy;

TEST_CASE("PowerParam") {
  const PowerParam p = PowerParam::linear(2.0);
  CHECK(p.h() == 3.0);
  CHECK(p.cross_coefficient() == doctest::Approx(4.0 / 3.0));
  CHECK_FALSE(p.gamma().has_value());
  const PowerParam s = PowerParam::squared(3.0);
  CHECK(s.mu() == 1.5);
  CHECK(*s.gamma() == 3.0);
  CHECK_THROWS_AS(PowerParam::linear(0.5), std::domain_error);
  CHECK_THROWS_AS(PowerParam::squared(1.0), std::domain_error);
}

TEST_CASE("power_chain at mu = 1 collapses and is ordered elsewhere") {
  const PowerChain one = power_chain(0.3, 1.0);
  CHECK(one.lhs == doctest::Approx(1.3));
  CHECK(one.tight == doctest::Approx(1.3));
  CHECK(one.loose == doctest::Approx(1.3));
  CHECK(one.naive == doctest::Approx(1.3));
  const PowerChain c = power_chain(0.5, 2.0);
  CHECK(c.lhs == doctest::Approx(2.25));
  CHECK(c.tight == doctest::Approx(2.0833333333).epsilon(1e-9));
  CHECK(c.loose == doctest::Approx(2.0));
  CHECK(c.naive == doctest::Approx(1.75));
  // x = 1 and x = 0 are equality points of the tight member
  CHECK(power_chain(1.0, 2.7).lhs == doctest::Approx(power_chain(1.0, 2.7).tight).epsilon(1e-14));
  CHECK(power_chain(0.0, 2.7).lhs == power_chain(0.0, 2.7).tight);
  CHECK_THROWS_AS(power_chain(1.5, 2.0), std::domain_error);
  CHECK_THROWS_AS(power_chain(0.5, 0.9), std::domain_error);
}

TEST_CASE("pair bound values") {
  const double t1 = 0.37037, t2 = 0.12346;
  CHECK(pair_bound(t1, t2, PowerParam::linear(1.0), Coupling::Linear) == doctest::Approx(0.49383).epsilon(1e-12));
  CHECK(pair_bound(0.0, 0.0, PowerParam::linear(1.0), Coupling::Linear) == 0.0);
  CHECK(pair_bound(0.0, 0.0, PowerParam::squared(2.0), Coupling::Squared) == 0.0);

  // rounded published inputs at eta = 2
  const PowerParam two = PowerParam::linear(2.0);
  const double diff = pair_bound(t1, t2, two, Coupling::Linear) - prior_pair_bound(t1, t2, two, PriorFamily::Tsallis);
  CHECK(diff == doctest::Approx(0.0101612).epsilon(1e-6));
  CHECK(prior_pair_bound(t1, t2, two, PriorFamily::Tsallis) == doctest::Approx(0.2133846).epsilon(1e-6));

  const PowerParam g2 = PowerParam::squared(2.0);
  CHECK(pair_bound(0.83477, 0.41466, g2, Coupling::Squared) == doctest::Approx(0.8687839).epsilon(1e-6));
  CHECK_THROWS_AS(pair_bound(0.1, 0.2, two, Coupling::Linear), std::invalid_argument);
  CHECK_THROWS_AS(pair_bound(0.5, 0.2, two, Coupling::Squared), std::invalid_argument);
}

TEST_CASE("the two linear prior families coincide") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(), b = a * rng.uniform();
    const PowerParam p = PowerParam::linear(rng.uniform(1.0, 5.0));
    CHECK(prior_pair_bound(a, b, p, PriorFamily::Tsallis) ==
          doctest::Approx(prior_pair_bound(a, b, p, PriorFamily::RenyiLinear)).epsilon(1e-12));
  }
}

TEST_CASE("new >= prior >= naive for ordered pairs") {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const double a = rng.uniform(), b = a * rng.uniform();
    const double mu = rng.uniform(1.0, 6.0);
    const PowerParam lin = PowerParam::linear(mu), sq = PowerParam::squared(2 * mu);
    const double nl = pair_bound(a, b, lin, Coupling::Linear);
    const double pl = prior_pair_bound(a, b, lin, PriorFamily::RenyiLinear);
    CHECK(nl - pl >= -1e-12);
    CHECK(pl - naive_pair_bound(a, b, lin, Coupling::Linear) >= -1e-12);
    const double ns = pair_bound(a, b, sq, Coupling::Squared);
    const double ps = prior_pair_bound(a, b, sq, PriorFamily::RenyiSquared);
    CHECK(ns - ps >= -1e-12);
    CHECK(ps - naive_pair_bound(a, b, sq, Coupling::Squared) >= -1e-12);
  }
}

TEST_CASE("chain bound with two values is the pair bound") {
  const std::vector<double> v{0.6, 0.2};
  const PowerParam p = PowerParam::linear(1.7);
  CHECK(chain_bound(v, 1, p, Coupling::Linear) == doctest::Approx(pair_bound(0.6, 0.2, p, Coupling::Linear)));
  CHECK(chain_bound_prior(v, 1, p, PriorFamily::RenyiLinear) ==
        doctest::Approx(prior_pair_bound(0.6, 0.2, p, PriorFamily::RenyiLinear)));
}

TEST_CASE("chain bound for three values, m = N - 2") {
  const std::vector<double> v{0.7, 0.4, 0.1};
  const PowerParam p = PowerParam::linear(2.0);
  const double h = 3.0, k = 4.0 / 3.0;
  const double tail = 0.4 * 0.4 + k * 0.4 * 0.1 + (4.0 - k - 1.0) * 0.01;
  CHECK(chain_bound(v, 2, p, Coupling::Linear) == doctest::Approx(0.49 + h * tail).epsilon(1e-14));
  // m = 0: ordering flips immediately, tail leads with the last value
  const double flipped = 0.1 * 0.1 + k * 0.1 * 0.4 + (4.0 - k - 1.0) * 0.16;
  CHECK(chain_bound(v, 0, p, Coupling::Linear) == doctest::Approx(h * 0.49 + flipped).epsilon(1e-14));
  CHECK(chain_bound(v, 2, p, Coupling::Linear) >= chain_bound_prior(v, 2, p, PriorFamily::RenyiLinear));
  CHECK(chain_bound_prior(v, 2, p, PriorFamily::RenyiLinear) >= chain_bound_naive(v, 2, p, Coupling::Linear));
  CHECK_THROWS_AS(chain_bound(v, 3, p, Coupling::Linear), std::invalid_argument);
}

TEST_CASE("compare_bounds fills margins and detects inconsistency") {
  const BoundReport r = compare_bounds(std::pow(0.98230, 2.0), 0.66742, 0.19010, PowerParam::linear(2.0),
                                       Regime::RenyiGE2);
  CHECK(r.exponent == 2.0);
  CHECK(r.margins[0] == doctest::Approx(r.lhs - r.new_bound));
  CHECK(r.margins[1] == doctest::Approx(r.new_bound - r.prior_bound));
  CHECK(r.consistent());
  const BoundReport bad = compare_bounds(0.1, 0.66742, 0.19010, PowerParam::linear(2.0), Regime::RenyiGE2);
  CHECK_FALSE(bad.consistent());
  const BoundReport sq = compare_bounds(0.5, 0.4, 0.3, PowerParam::squared(3.0), Regime::RenyiWindow);
  CHECK(sq.exponent == 3.0);
}

TEST_CASE("regime helpers") {
  CHECK(coupling_for(Regime::RenyiWindow) == Coupling::Squared);
  CHECK(coupling_for(Regime::TsallisQ2to3) == Coupling::Linear);
  CHECK(prior_for(Regime::TsallisQ2to3) == PriorFamily::Tsallis);
  CHECK(prior_for(Regime::RenyiGE2) == PriorFamily::RenyiLinear);
  CHECK(prior_for(Regime::RenyiWindow) == PriorFamily::RenyiSquared);
}
