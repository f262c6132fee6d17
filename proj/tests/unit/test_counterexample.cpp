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
#include "rnsg/counterexample.hpp"
#include "rnsg/random.hpp"

using namespace rnsg;
using namespace rnsg::counterexample;

TEST_CASE("interval indicators") {
  CHECK(f(Rational(0)).measure() == Rational(1));
  CHECK(f(Rational(1)).measure() == Rational(0));
  CHECK(f(Rational(1, 4)).measure() == Rational(3, 4));
  CHECK(f(0.25).measure() == 0.75);
  CHECK_THROWS_AS(f(Rational(3, 2)), Error);
  CHECK_THROWS_AS(f(-0.1), Error);
  const auto ind = f(Rational(1, 2));
  CHECK_FALSE(ind.contains(Rational(1, 2)));
  CHECK(ind.contains(Rational(1)));
}

TEST_CASE("difference of indicators") {
  const auto d = difference(Rational(3, 10), Rational(1, 10));
  CHECK(d.sign == -1);
  CHECK(d.support.lo == Rational(1, 10));
  CHECK(d.support.hi == Rational(3, 10));
  const auto e = difference(Rational(1, 10), Rational(3, 10));
  CHECK(e.sign == 1);
  CHECK(difference(Rational(1, 2), Rational(1, 2)).sign == 0);
}

TEST_CASE("exceedance closed forms") {
  CHECK(diff_quotient_exceedance(Rational(3, 10), Rational(2, 10), Rational(1)) == Rational(1, 10));
  CHECK(diff_quotient_exceedance(Rational(9, 10), Rational(1, 10), Rational(2)) == Rational(0));
  // 1/|t - t0| = eps exactly is not an exceedance.
  CHECK(diff_quotient_exceedance(Rational(1, 2), Rational(0), Rational(2)) == Rational(0));
  CHECK_THROWS_AS(diff_quotient_exceedance(Rational(1, 2), Rational(1, 2), Rational(1)), Error);
  CHECK(diff_quotient_exceedance(0.3, 0.2, 1.0) == doctest::Approx(0.1));
}

TEST_CASE("exceedance never exceeds |t - t0| on random rationals") {
  Rng rng(2);
  for (int k = 0; k < 500; ++k) {
    const Rational t(rng.integer(0, 997), 997);
    Rational t0(rng.integer(0, 997), 997);
    if (t == t0) continue;
    const Rational eps(rng.integer(1, 5000), 100);
    const Rational len = abs_value(Rational(t - t0));
    const Rational e = diff_quotient_exceedance(t, t0, eps);
    CHECK(e <= len);
    CHECK(e == (Rational(1) / len > eps ? len : Rational(0)));
  }
}

TEST_CASE("derivative modulus is valid by brute-force scan") {
  for (const auto& [t0, eps, lambda] : std::vector<std::array<double, 3>>{{0.5, 0.5, 0.1}, {0.3, 1e6, 0.01}, {0.0, 2.0, 0.2}}) {
    const auto w = derivative_in_probability(t0, eps, lambda);
    CHECK(w.derivative == 0.0);
    CHECK(w.delta == lambda);
    for (int k = 1; k <= 10000; ++k) {
      const double off = w.delta * (2.0 * k / 10001.0 - 1.0);
      const double t = t0 + off;
      if (off == 0.0 || t < 0.0 || t > 1.0) continue;
      CHECK(diff_quotient_exceedance(t, t0, eps) < lambda);
    }
  }
  CHECK_THROWS_AS(derivative_in_probability(0.5, 1.0, 1.0), Error);
}

TEST_CASE("fundamental theorem of calculus fails exactly") {
  const auto g = ftc_gap();
  CHECK(g.endpoint_difference == Rational(-1));
  CHECK(g.integral == Rational(0));
  CHECK(g.gap == Rational(1));
}

TEST_CASE("lipschitz failure witness") {
  const auto pairs = dyadic_pairs(20);
  const auto rows = lipschitz_failure_witness<Rational>(pairs);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::int64_t p = std::int64_t{1} << (k + 1);
    CHECK(rows[k].modulus == Rational(p));
    CHECK(rows[k].measure == Rational(1, p));
  }
  const std::vector<std::pair<Rational, Rational>> unit{{Rational(0), Rational(1)}};
  const auto u = lipschitz_failure_witness<Rational>(unit);
  CHECK(u[0].modulus == Rational(1));
  CHECK(u[0].measure == Rational(1));
  CHECK_THROWS_AS(lipschitz_failure_witness<Rational>({}), Error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/10") == Rational(3, 10));
  CHECK(parse_rational(" 0.25 ") == Rational(1, 4));
  CHECK(parse_rational("-1.5e-2") == Rational(-3, 200));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("2e3") == Rational(2000));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(to_string(Rational(-1)) == "-1");
  CHECK(to_string(Rational(1, 1024)) == "1/1024");
}
