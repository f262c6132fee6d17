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
#include "rnsg/renorm.hpp"

using namespace rnsg;

namespace {

Generator scalar_gen(double a) {
  CMatrix A(1, 1);
  A << a;
  return Generator(ModuleHom(AtomSpace::make({1.0}), {A}));
}

}  // namespace

TEST_CASE("eta norm closed forms") {
  const auto Z = Generator(ModuleHom::zero(AtomSpace::uniform(2), 2));
  const auto x = RNVector::from_rows(Z.space(), {{3, 4}, {1, 0}});
  const auto r = eta_norm(Z, L0Scalar::constant(Z.space(), 1.0), x);
  CHECK(r.value.re(0) == doctest::Approx(5.0));
  CHECK(r.value.re(1) == doctest::Approx(1.0));
  CHECK(r.tail_flag);

  const auto G = scalar_gen(-1.0);
  const auto y = RNVector::from_rows(G.space(), {{2.0}});
  for (double eta : {1.0, 100.0}) {
    const auto e = eta_norm(G, L0Scalar::constant(G.space(), eta), y);
    CHECK(e.value.re(0) == doctest::Approx(2.0));
    CHECK(e.argmax[0] == 0);
    CHECK(e.power_bound.re(0) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(eta_norm(G, L0Scalar::constant(G.space(), 0.0), y), Error);
}

TEST_CASE("bar norm collapses to the grid top") {
  const auto G = scalar_gen(-1.0);
  const auto x = RNVector::from_rows(G.space(), {{1.5}});
  std::vector<L0Scalar> grid;
  for (double v : {1.0, 10.0, 100.0}) grid.push_back(L0Scalar::constant(G.space(), v));
  const auto b = bar_norm(G, x, grid);
  CHECK(b.collapse_ok);
  CHECK(b.value.re(0) == doctest::Approx(eta_norm(G, grid.back(), x).value.re(0)));
  std::vector<L0Scalar> bad{grid[1], grid[0]};
  CHECK_THROWS_AS(bar_norm(G, x, bad), Error);
}

TEST_CASE("contraction closed forms") {
  const auto G = scalar_gen(-1.0);
  const auto x = RNVector::from_rows(G.space(), {{1.0}});
  std::vector<L0Scalar> grid{L0Scalar::constant(G.space(), 1.0)};
  const auto c = contraction_check(G, L0Scalar::constant(G.space(), 1.0), x, grid);
  CHECK(c.ok);
  CHECK(c.lhs.re(0) == doctest::Approx(0.5));
  CHECK(c.rhs.re(0) == doctest::Approx(1.0));

  const auto Z = scalar_gen(0.0);
  const auto cz = contraction_check(Z, L0Scalar::constant(Z.space(), 1.0), x, grid);
  CHECK(cz.margin.re(0) == doctest::Approx(0.0));
}

TEST_CASE("sandwich and monotonicity on random bounded instances") {
  Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const auto s = random_space(rng, static_cast<std::size_t>(rng.integer(1, 3)));
    const auto G = random_stable_generator(rng, s, rng.integer(1, 3), Field::Real, 0.3);
    const auto x = random_vector(rng, s, G.dim(), Field::Real);
    const auto env = certify_envelope_at(G, L0Scalar::constant(s, 0.0));
    const auto xn = l0_norm(x);
    L0Scalar prev;
    for (double eta : {0.25, 0.5, 1.0, 2.0}) {
      const auto r = eta_norm(G, L0Scalar::constant(s, eta), x);
      for (std::size_t i = 0; i < s.size(); ++i) {
        REQUIRE(env.global[i]);
        CHECK(xn.re(i) <= r.value.re(i) * (1 + 1e-12));
        CHECK(r.value.re(i) <= env.M.re(i) * xn.re(i) * (1 + 1e-9));
        CHECK(r.power_bound.re(i) <= env.M.re(i) * (1 + 1e-9));
        if (prev.size() > 0) CHECK(prev.re(i) <= r.value.re(i) * (1 + 1e-9));
      }
      prev = r.value;
    }
  }
}

TEST_CASE("orbit sup norm") {
  const auto s = AtomSpace::make({1.0});
  CMatrix R(2, 2);
  R << 0, 1, -1, 0;
  const Generator rot(ModuleHom(s, {R}));
  const auto x = RNVector::from_rows(s, {{1.0, 0.0}});
  const auto grid = uniform_grid(10.0, 101);
  const auto o = orbit_sup_norm(rot, x, grid);
  CHECK(o.value.re(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(o.upper.re(0) >= 1.0);

  const auto decay = scalar_gen(-1.0);
  const auto y = RNVector::from_rows(decay.space(), {{2.0}});
  CHECK(orbit_sup_norm(decay, y, grid).value.re(0) == doctest::Approx(2.0));

  CMatrix J(2, 2);
  J << 0, 1, 0, 0;
  const Generator jordan(ModuleHom(s, {J}));
  CHECK_THROWS_AS(orbit_sup_norm(jordan, x, grid), Error);
}
