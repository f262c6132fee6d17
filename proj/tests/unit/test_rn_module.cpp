/*
 * Copyright 2026 The rnsg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "doctest.h"
#include "rnsg/error.hpp"
#include "rnsg/random.hpp"

using namespace rnsg;

TEST_CASE("l0_norm closed forms") {
  const auto s = AtomSpace::uniform(2);
  CHECK(l0_norm(RNVector::zero(s, 3)).re(1) == 0.0);
  const auto x = RNVector::from_rows(s, {{3, 4}, {0, 1}});
  const auto n = l0_norm(x);
  CHECK(n.re(0) == doctest::Approx(5.0));
  CHECK(n.re(1) == doctest::Approx(1.0));
  const auto xi = L0Scalar::from_real(s, {2, -1});
  const auto m = l0_norm(xi * x);
  CHECK(m.re(0) == doctest::Approx(10.0));
  CHECK(m.re(1) == doctest::Approx(1.0));
}

TEST_CASE("exceedance and neighbourhoods") {
  const auto s = AtomSpace::make({0.25, 0.75});
  const auto x = RNVector::from_rows(s, {{1, 0}, {0, 3}});
  CHECK(exceedance_probability(RNVector::zero(s, 2), 0.5) == 0.0);
  CHECK(exceedance_probability(x, 2.0) == doctest::Approx(0.75));
  CHECK(exceedance_probability(x, 1.0) == doctest::Approx(1.0));  // boundary counts
  CHECK(exceedance_probability(x, 5.0) == 0.0);
  CHECK(in_neighbourhood(x, 2.0, 0.8));
  CHECK_FALSE(in_neighbourhood(x, 2.0, 0.75));
  CHECK_THROWS_AS(exceedance_probability(x, 0.0), Error);
}

TEST_CASE("convergence in probability is pointwise convergence") {
  const auto s = AtomSpace::uniform(2);
  const auto limit = RNVector::from_rows(s, {{1, 0}, {0, 1}});
  std::vector<RNVector> terms;
  for (int k = 1; k <= 30; ++k) {
    terms.push_back(limit + RNVector::from_rows(s, {{1.0 / k, 0}, {0, 1.0 / (k * k)}}));
  }
  const auto r = converges_in_probability(terms, limit, 0.05);
  CHECK(r.converges);
  CHECK(r.trajectory.size() == 30);
  CHECK(r.exceedance == 0.0);
  const auto bad = converges_in_probability(terms, limit, 1e-2);
  CHECK_FALSE(bad.converges);
  CHECK(bad.exceedance == doctest::Approx(0.5));
}

TEST_CASE("module axioms on random samples") {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_space(rng, static_cast<std::size_t>(rng.integer(1, 8)));
    const auto d = rng.integer(1, 6);
    const auto x = random_vector(rng, s, d, Field::Complex);
    const auto y = random_vector(rng, s, d, Field::Complex);
    const auto xi = random_scalar(rng, s, Field::Complex);
    const auto nx = l0_norm(x);
    const auto ny = l0_norm(y);
    const auto nxi = l0_norm(xi * x);
    const auto nsum = l0_norm(x + y);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(std::abs(nxi.re(i) - std::abs(xi[i]) * nx.re(i)) <= 1e-12 * (1 + nxi.re(i)));
      CHECK(nsum.re(i) <= nx.re(i) + ny.re(i) + 1e-12);
    }
  }
}

TEST_CASE("shape checks") {
  const auto s = AtomSpace::uniform(2);
  CHECK_THROWS_AS(RNVector::zero(s, 2) + RNVector::zero(s, 3), Error);
  CHECK_THROWS_AS(RNVector::zero(s, 2) + RNVector::zero(AtomSpace::uniform(3), 2), Error);
}
