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

#include <optional>
#include <span>
#include <vector>

#include "rnsg/resolvent.hpp"

namespace rnsg {

struct EtaNormOptions {
  int n_max = 64;
  /// The truncated supremum counts as stabilized when the running maximum
  /// did not grow over the last `stabilization_k` powers.
  int stabilization_k = 8;
};

/// Truncated resolvent-power norm sup_{0<=n<=n_max} norm(eta^n R(eta)^n x).
struct EtaNormResult {
  L0Scalar value;
  std::vector<bool> stabilized;
  bool tail_flag = false;  // every atom stabilized
  std::vector<int> argmax;
  /// max_{n<=n_max} op_norm((eta R(eta))^n): the power bound at this eta.
  L0Scalar power_bound;
};

EtaNormResult eta_norm(const Generator& G, const L0Scalar& eta, const RNVector& x, const EtaNormOptions& opts = {});

/// Supremum of eta_norm over an increasing family of strictly positive
/// shifts. Monotonicity in eta makes it equal to the value at the top
/// element; `collapse_gap` records how far the computed maximum sits above it.
struct BarNormResult {
  L0Scalar value;
  L0Scalar top_value;
  std::vector<L0Scalar> per_eta;
  L0Scalar collapse_gap;
  bool collapse_ok = false;
  bool tail_flag = false;
};

BarNormResult bar_norm(const Generator& G, const RNVector& x, std::span<const L0Scalar> eta_grid,
                       const EtaNormOptions& opts = {});

struct ContractionCheck {
  L0Scalar lhs;  // bar_norm(xi R(xi) x)
  L0Scalar rhs;  // bar_norm(x)
  L0Scalar margin;
  bool ok = false;
  bool tail_flag = false;
};

/// bar_norm(xi R(xi) x) <= bar_norm(x). The grid is extended by the
/// pointwise maximum of xi and its top element.
ContractionCheck contraction_check(const Generator& G, const L0Scalar& xi, const RNVector& x,
                                   std::span<const L0Scalar> eta_grid, const EtaNormOptions& opts = {},
                                   double tolerance = 1e-9);

/// sup_{t >= 0} norm(T(t)x) over a time grid, for a.s.u. bounded generators.
struct OrbitNormResult {
  L0Scalar value;       // max over the grid (t = 0 always included)
  L0Scalar upper;       // refined upper bound covering gaps between grid points and the tail
  L0Scalar tail_bound;  // bound on norm(T(t)x) beyond the last grid point
  std::vector<bool> tail_dominated;
};

OrbitNormResult orbit_sup_norm(const Generator& G, const RNVector& x, std::span<const double> t_grid);

}  // namespace rnsg
