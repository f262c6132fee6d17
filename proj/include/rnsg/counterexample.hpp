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

#pragma once

// Indicator-valued path t -> class of 1_{(t,1]} on ([0,1], Borel, Lebesgue).
// The path is differentiable in probability with zero derivative, yet its
// endpoint difference is -1. All quantities are closed forms in the
// endpoints, evaluated exactly for rational input.

#include <boost/rational.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rnsg/error.hpp"

namespace rnsg::counterexample {

using Rational = boost::rational<std::int64_t>;

template <class T>
T abs_value(const T& v) {
  return v < T(0) ? -v : v;
}

/// Class of the indicator of the half-open interval (lo, hi].
template <class T>
struct IntervalIndicator {
  T lo{0};
  T hi{0};
  [[nodiscard]] T measure() const { return hi - lo; }
  [[nodiscard]] bool contains(const T& w) const { return lo < w && w <= hi; }
};

template <class T>
void require_unit_interval(const T& t, const char* what) {
  if (t < T(0) || t > T(1)) raise(ErrorCode::OutOfDomain, std::string(what) + " must lie in [0, 1]");
}

template <class T>
IntervalIndicator<T> f(const T& t) {
  require_unit_interval(t, "t");
  return {t, T(1)};
}

/// f(t) - f(t0) = sign * 1_{(min, max]}.
template <class T>
struct SignedIndicator {
  int sign = 0;
  IntervalIndicator<T> support;
};

template <class T>
SignedIndicator<T> difference(const T& t, const T& t0) {
  const auto a = f(t);
  const auto b = f(t0);
  if (a.lo == b.lo) return {0, {a.lo, a.lo}};
  // (t, 1] minus (t0, 1]: removes (t0, t] when t > t0, adds (t, t0] otherwise.
  if (a.lo > b.lo) return {-1, {b.lo, a.lo}};
  return {+1, {a.lo, b.lo}};
}

/// P{ |(f(t) - f(t0)) / (t - t0)| > eps }. The quotient has modulus
/// 1/|t - t0| on a set of measure |t - t0| and vanishes elsewhere.
template <class T>
T diff_quotient_exceedance(const T& t, const T& t0, const T& eps) {
  if (t == t0) raise(ErrorCode::DegenerateQuotient, "t and t0 coincide");
  if (!(eps > T(0))) raise(ErrorCode::NonpositiveEpsilon, "eps must be positive");
  const auto diff = difference(t, t0);
  const T modulus = T(1) / abs_value(T(t - t0));
  return modulus > eps ? diff.support.measure() : T(0);
}

/// Explicit modulus of differentiability at t0: for 0 < |t - t0| < delta the
/// exceedance above eps stays below lambda, because it never exceeds |t - t0|.
template <class T>
struct DerivativeWitness {
  T delta{0};
  T derivative{0};
};

template <class T>
DerivativeWitness<T> derivative_in_probability(const T& t0, const T& eps, const T& lambda) {
  require_unit_interval(t0, "t0");
  if (!(eps > T(0))) raise(ErrorCode::NonpositiveEpsilon, "eps must be positive");
  if (!(lambda > T(0) && lambda < T(1))) raise(ErrorCode::InvalidArgument, "lambda must lie in (0, 1)");
  return {lambda, T(0)};
}

struct FtcGap {
  Rational endpoint_difference;  // a.s. value of f(1) - f(0)
  Rational integral;             // integral of the zero derivative
  Rational gap;                  // |endpoint_difference - integral|
};

inline FtcGap ftc_gap() {
  const auto d = difference(Rational(1), Rational(0));
  // The support (0, 1] has full measure, so the class is the constant sign.
  if (d.support.measure() != Rational(1)) raise(ErrorCode::InvalidArgument, "unexpected support");
  FtcGap g;
  g.endpoint_difference = Rational(d.sign);
  g.integral = Rational(0);
  g.gap = abs_value(Rational(g.endpoint_difference - g.integral));
  return g;
}

template <class T>
struct WitnessRow {
  T t1{0};
  T t2{0};
  T modulus{0};  // essential sup of |(f(t1) - f(t2)) / (t1 - t2)|
  T measure{0};  // measure of the set where it is attained
};

template <class T>
std::vector<WitnessRow<T>> lipschitz_failure_witness(std::span<const std::pair<T, T>> pairs) {
  if (pairs.empty()) raise(ErrorCode::EmptyGrid, "witness needs at least one pair");
  std::vector<WitnessRow<T>> rows;
  rows.reserve(pairs.size());
  for (const auto& [t1, t2] : pairs) {
    if (t1 == t2) raise(ErrorCode::DegenerateQuotient, "pair with equal times");
    const auto d = difference(t1, t2);
    const T len = abs_value(T(t1 - t2));
    rows.push_back({t1, t2, T(1) / len, d.support.measure()});
  }
  return rows;
}

/// Pairs (1/2, 1/2 + 2^-k) for k = 1..k_max.
std::vector<std::pair<Rational, Rational>> dyadic_pairs(int k_max);

/// Accepts "p/q", integers and finite decimals ("0.25", "-1.5e-2").
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

}  // namespace rnsg::counterexample
