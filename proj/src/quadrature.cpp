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

#include "rnsg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "rnsg/error.hpp"

namespace rnsg {

namespace {

// (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double prev = 1.0;
  double cur = x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return {cur, n * (x * cur - prev) / (x * x - 1.0)};
}

}  // namespace

GaussRule gauss_legendre(int points) {
  if (points < 1) raise(ErrorCode::InvalidArgument, "Gauss-Legendre rule needs at least one point");
  const int n = points;
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

CompositeRule composite_gauss(double a, double b, int panels, const GaussRule& rule) {
  if (panels < 1) raise(ErrorCode::InvalidArgument, "composite rule needs at least one panel");
  CompositeRule out;
  const double h = (b - a) / panels;
  out.nodes.reserve(static_cast<std::size_t>(panels) * rule.nodes.size());
  out.weights.reserve(out.nodes.capacity());
  for (int p = 0; p < panels; ++p) {
    const double mid = a + h * (p + 0.5);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      out.nodes.push_back(mid + 0.5 * h * rule.nodes[k]);
      out.weights.push_back(0.5 * h * rule.weights[k]);
    }
  }
  return out;
}

}  // namespace rnsg
