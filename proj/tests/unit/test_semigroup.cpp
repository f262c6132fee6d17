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

#include "../support/oracles.hpp"
#include "doctest.h"
#include "rnsg/error.hpp"
#include "rnsg/random.hpp"

using namespace rnsg;

namespace {

Generator single(const CMatrix& A) { return Generator(ModuleHom(AtomSpace::make({1.0}), {A})); }

CMatrix jordan() {
  CMatrix J(2, 2);
  J << 0, 1, 0, 0;
  return J;
}

CMatrix rotation() {
  CMatrix R(2, 2);
  R << 0, 1, -1, 0;
  return R;
}

}  // namespace

TEST_CASE("evaluate and the semigroup law") {
  Rng rng(1);
  const auto s = random_space(rng, 3);
  const auto G = random_generator(rng, s, 3, Field::Complex, -1.0, 1.0);
  CHECK(evaluate(G, 0.0) == ModuleHom::identity(s, 3));
  CHECK_THROWS_AS(evaluate(G, -1.0), Error);
  for (double t : {0.1, 0.7, 2.0}) {
    const auto r = semigroup_law_residual(G, t, 1.3 * t);
    const auto n = op_norm(evaluate(G, 2.3 * t));
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(r.re(i) <= 1e-10 * (1 + n.re(i)));
  }
  // Equal stacks give identical evaluations bit for bit.
  const Generator H(ModuleHom(s, G.op().mats()));
  CHECK(evaluate(G, 0.37) == evaluate(H, 0.37));
}

TEST_CASE("jordan block norms match the closed form") {
  const auto G = single(jordan());
  for (double t : {0.5, 1.0, 3.0, 10.0}) {
    CHECK(op_norm(evaluate(G, t)).re(0) == doctest::Approx(oracle::jordan_norm(t)).epsilon(1e-13));
  }
  CHECK(G.spectral_abscissa().re(0) == 0.0);
  CHECK(G.log_norm().re(0) == doctest::Approx(0.5));
}

TEST_CASE("generator recovery converges at first order") {
  Rng rng(2);
  const auto s = random_space(rng, 2);
  const auto G = random_generator(rng, s, 3, Field::Real, -1.0, 0.5);
  const auto x = random_vector(rng, s, 3, Field::Real);
  const std::vector<double> sched{1e-1, 1e-2, 1e-3, 1e-4};
  const auto rec = generator_recovery(G, x, sched);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t k = 1; k < sched.size(); ++k) {
      const double ratio = rec.residuals[k - 1].re(i) / rec.residuals[k].re(i);
      CHECK(ratio == doctest::Approx(10.0).epsilon(0.1));
    }
  }
  const std::vector<double> bad{1e-2, 1e-1};
  CHECK_THROWS_AS(generator_recovery(G, x, bad), Error);
}

TEST_CASE("certified envelope bounds the semigroup on a long grid") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_space(rng, static_cast<std::size_t>(rng.integer(1, 4)));
    const auto G = random_generator(rng, s, rng.integer(1, 4), Field::Real, -1.0, 1.0);
    const auto env = certified_envelope(G);
    for (double t : uniform_grid(30.0, 121)) {
      const auto n = op_norm(evaluate(G, t));
      for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(env.global[i]);
        CHECK(env.M.re(i) >= 1.0);
        CHECK(env.tau.re(i) >= G.spectral_abscissa().re(i) - 1e-12);
        CHECK(n.re(i) <= env.M.re(i) * std::exp(env.tau.re(i) * t) * (1 + 1e-9));
      }
    }
  }
}

TEST_CASE("envelope strategies on the jordan block") {
  const auto G = single(jordan());
  const auto grid = uniform_grid(10.0, 1001);
  const auto spectral = growth_envelope(G, grid);
  CHECK(spectral.tau.re(0) == 0.0);
  CHECK(spectral.M.re(0) == doctest::Approx(oracle::jordan_norm(10.0)).epsilon(1e-12));
  CHECK_FALSE(spectral.global[0]);

  EnvelopeOptions fixed;
  fixed.strategy = EnvelopeStrategy::FixedTau;
  fixed.tau = L0Scalar::constant(G.space(), 1.0);
  const auto f = growth_envelope(G, grid, fixed);
  // norm(T(t)) exp(-t) is decreasing, so the sup sits at t = 0.
  CHECK(f.M.re(0) == doctest::Approx(1.0));

  const auto cert = certified_envelope(G);
  CHECK(cert.global[0]);
  CHECK(cert.tau.re(0) > 0.0);
  CHECK(cert.tau.re(0) <= 0.5);
  // Defective zero eigenvalue: no certificate at tau = 0.
  const auto at0 = certify_envelope_at(G, L0Scalar::constant(G.space(), 0.0));
  CHECK_FALSE(at0.global[0]);
}

TEST_CASE("asu boundedness is decided spectrally") {
  CHECK(is_asu_bounded(single(rotation())).bounded[0]);
  CHECK_FALSE(is_asu_bounded(single(jordan())).bounded[0]);
  CMatrix D(2, 2);
  D << -1, 5, 0, -2;
  const auto r = is_asu_bounded(single(D));
  CHECK(r.bounded[0]);
  CHECK(r.sup_certified[0]);
  // An exact sup check on a fine grid.
  double sup = 0;
  for (double t : uniform_grid(20.0, 4001)) sup = std::max(sup, op_norm(evaluate(single(D), t)).re(0));
  CHECK(r.sup[0] >= sup * (1 - 1e-12));
  CHECK(r.sup[0] <= sup * 1.01);
  CMatrix U(1, 1);
  U << 0.1;
  CHECK_FALSE(is_asu_bounded(single(U)).bounded[0]);
  // Over a finite horizon every bounded generator is bounded.
  const auto ab = is_as_bounded(single(jordan()), 5.0);
  CHECK(ab.bound.re(0) >= oracle::jordan_norm(5.0));
  CHECK(ab.bound.re(0) <= oracle::jordan_norm(5.0) * 1.01);
}

TEST_CASE("derivative and integral identities") {
  Rng rng(9);
  const auto s = random_space(rng, 2);
  const auto G = random_stable_generator(rng, s, 3, Field::Real, 0.2);
  const auto x = random_vector(rng, s, 3, Field::Real);
  for (double t : {0.0, 0.5, 2.0}) {
    const auto r = orbit_derivative_residuals(G, x, t);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(r.commutator.re(i) <= 1e-10 * (1 + l0_norm(x).re(i)));
      CHECK(r.difference.re(i) <= 1e-6 * (1 + l0_norm(x).re(i)));
    }
  }
  const auto e1 = ftc_residual(G, x, 2.0, 4);
  const auto e2 = ftc_residual(G, x, 2.0, 8);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(e1.re(i) / e2.re(i) >= 8.0 * 0.8);
}

TEST_CASE("orbit lipschitz constant respects its bound") {
  Rng rng(10);
  const auto s = random_space(rng, 2);
  const auto G = random_generator(rng, s, 2, Field::Real, -0.5, 0.5);
  const auto x = random_vector(rng, s, 2, Field::Real);
  const auto rep = orbit_lipschitz_constant(G, x, 2.0, uniform_grid(2.0, 41));
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(rep.constant.re(i) > 0.0);
    CHECK(rep.constant.re(i) <= rep.bound.re(i));
  }
}

TEST_CASE("rescale shifts the spectrum") {
  const auto G = single(jordan());
  const auto H = rescale(G, L0Scalar::constant(G.space(), 2.0));
  CHECK(H.spectral_abscissa().re(0) == doctest::Approx(-2.0));
  const auto a = op_norm(evaluate(H, 1.5)).re(0);
  CHECK(a == doctest::Approx(oracle::jordan_norm(1.5) * std::exp(-3.0)).epsilon(1e-12));
}
