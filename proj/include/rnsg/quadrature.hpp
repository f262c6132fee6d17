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

#include <functional>
#include <vector>

namespace rnsg {

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n - 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  [[nodiscard]] int order() const noexcept { return 2 * static_cast<int>(nodes.size()); }
};

GaussRule gauss_legendre(int points);

/// Nodes and weights of the composite rule with `panels` equal panels on [a, b].
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
CompositeRule composite_gauss(double a, double b, int panels, const GaussRule& rule);

}  // namespace rnsg
