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

#include <random>

#include "../support/oracles.hpp"
#include "doctest.h"
#include "rnsg/error.hpp"
#include "rnsg/random.hpp"

using namespace rnsg;

TEST_CASE("op_norm closed forms") {
  const auto s = AtomSpace::uniform(2);
  CMatrix J(2, 2);
  J << 1, 1, 0, 1;
  CMatrix D(2, 2);
  D << 3, 0, 0, -4;
  const ModuleHom T(s, {J, D});
  const auto n = op_norm(T);
  CHECK(n.re(0) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-14));
  CHECK(n.re(1) == doctest::Approx(4.0));
  CHECK(op_norm(ModuleHom::identity(s, 3)).re(0) == doctest::Approx(1.0));
  CHECK(op_norm(ModuleHom::zero(s, 3)).re(1) == 0.0);
}

TEST_CASE("op_norm attains at the top singular vector and bounds every image") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_space(rng, static_cast<std::size_t>(rng.integer(1, 4)));
    const auto d = rng.integer(1, 4);
    const auto T = random_hom(rng, s, d, Field::Complex);
    const auto n = op_norm(T);
    const auto v = top_singular_vector(T);
    const auto tv = l0_norm(apply(T, v));
    const auto vn = l0_norm(v);
    const auto x = random_vector(rng, s, d, Field::Complex);
    const auto tx = l0_norm(apply(T, x));
    const auto xn = l0_norm(x);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(vn.re(i) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(tv.re(i) - n.re(i)) <= 1e-10 * n.re(i));
      CHECK(tx.re(i) <= n.re(i) * xn.re(i) * (1 + 1e-12));
      CHECK(n.re(i) == doctest::Approx(oracle::spectral_norm_power(T.at(i))).epsilon(1e-10));
    }
  }
}

TEST_CASE("algebra of homomorphisms") {
  Rng rng(4);
  const auto s = random_space(rng, 3);
  const auto T = random_hom(rng, s, 3, Field::Real);
  const auto U = random_hom(rng, s, 3, Field::Real);
  const auto x = random_vector(rng, s, 3, Field::Real);
  const auto lhs = apply(compose(T, U), x);
  const auto rhs = apply(T, apply(U, x));
  CHECK(l0_norm(lhs - rhs).re(0) <= 1e-12 * (1 + l0_norm(lhs).re(0)));
  CHECK(power(T, 0) == ModuleHom::identity(s, 3));
  const auto p3 = power(T, 3);
  const auto c3 = compose(T, compose(T, T));
  CHECK(op_norm(subtract(p3, c3)).re(2) <= 1e-12 * (1 + op_norm(c3).re(2)));
  const auto xi = random_scalar(rng, s, Field::Real);
  const auto a = apply(scalar_mul(xi, T), x);
  const auto b = xi * apply(T, x);
  CHECK(l0_norm(a - b).re(1) <= 1e-12 * (1 + l0_norm(a).re(1)));
  CHECK(T.is_real());
  CHECK_THROWS_AS(add(T, random_hom(rng, s, 2, Field::Real)), Error);
}
