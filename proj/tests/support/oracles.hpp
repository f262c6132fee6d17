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

// Independent reference computations for tests. None of these call into the
// library's numerical kernels.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>

namespace oracle {

using LMatrix = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
using CMatrix = Eigen::MatrixXcd;

/// exp(A) by Taylor series in long double with scaling to norm <= 1/2 and
/// repeated squaring.
inline CMatrix expm_taylor(const CMatrix& A) {
  const auto d = A.rows();
  LMatrix L = A.cast<std::complex<long double>>();
  long double norm = 0;
  for (Eigen::Index c = 0; c < d; ++c) {
    long double s = 0;
    for (Eigen::Index r = 0; r < d; ++r) s += std::abs(L(r, c));
    norm = std::max(norm, s);
  }
  int squarings = 0;
  while (norm > 0.5L) {
    norm /= 2;
    ++squarings;
  }
  L /= std::ldexp(1.0L, squarings);
  LMatrix term = LMatrix::Identity(d, d);
  LMatrix sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * L) / static_cast<long double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum.cast<std::complex<double>>();
}

/// Largest eigenvalue of P*P by power iteration in long double, square-rooted.
inline double spectral_norm_power(const CMatrix& P, int iters = 2000) {
  const LMatrix Q = P.cast<std::complex<long double>>();
  const LMatrix H = Q.adjoint() * Q;
  Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, 1> v(H.cols());
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = std::complex<long double>(1.0L + 0.1L * k, 0.3L * k);
  long double lam = 0;
  for (int it = 0; it < iters; ++it) {
    auto w = (H * v).eval();
    const long double n = std::sqrt(std::abs(w.squaredNorm()));
    if (n == 0) return 0.0;
    v = w / n;
    lam = n;
  }
  return static_cast<double>(std::sqrt(lam));
}

/// Norm of exp(tJ) for J = [[0,1],[0,0]]: largest singular value of [[1,t],[0,1]].
inline double jordan_norm(double t) { return (t + std::sqrt(t * t + 4.0)) / 2.0; }

/// Brute-force max of |Px| over unit x: random starts followed by a shrinking
/// local search around the incumbent.
inline double brute_force_norm(const CMatrix& P, std::mt19937_64& rng, int samples) {
  std::normal_distribution<double> g;
  const auto d = P.cols();
  auto draw = [&] {
    Eigen::VectorXcd v(d);
    for (Eigen::Index k = 0; k < d; ++k) v(k) = {g(rng), g(rng)};
    return v;
  };
  double best = 0.0;
  Eigen::VectorXcd bx = draw().normalized();
  const int global = samples / 2;
  for (int s = 0; s < global; ++s) {
    const Eigen::VectorXcd x = draw().normalized();
    const double v = (P * x).norm();
    if (v > best) {
      best = v;
      bx = x;
    }
  }
  double radius = 0.5;
  for (int s = global; s < samples; ++s) {
    const Eigen::VectorXcd x = (bx + radius * draw()).normalized();
    const double v = (P * x).norm();
    if (v > best) {
      best = v;
      bx = x;
    } else {
      radius = std::max(radius * 0.995, 1e-9);
    }
  }
  return best;
}

}  // namespace oracle
