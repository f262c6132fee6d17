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
#include <vector>

#include "rnsg/semigroup.hpp"

namespace rnsg {

/// Distance from xi(omega) to the spectrum of A(omega), per atom.
L0Scalar spectral_distance(const Generator& G, const L0Scalar& xi);

/// xi(omega) is in the resolvent set at atom omega when its distance to the
/// spectrum exceeds 1e-10 (1 + norm(A(omega))).
std::vector<bool> in_resolvent_set(const Generator& G, const L0Scalar& xi);

/// R(xi, A) = (xi I - A)^-1 by per-atom LU with partial pivoting.
struct ResolventSample {
  L0Scalar xi;
  ModuleHom R;
  L0Scalar residual;     // op_norm((xi I - A) R - I)
  L0Scalar error_bound;  // norm(R) residual / (1 - residual), a bound on the error of R
};

ResolventSample resolve_direct(const Generator& G, const L0Scalar& xi);

struct LaplaceOptions {
  std::optional<double> s_max;  // default: tail certificate <= tail_target * norm(x)
  std::optional<int> panels;    // default: panel length (|xi| + norm(A)) <= 2
  int points = 8;               // Gauss-Legendre points per panel
  double tail_target = 1e-10;
  int max_panels = 1 << 16;
};

/// R(xi, A)x as the Laplace integral of exp(-xi s) T(s)x over [0, s_max],
/// with a tail bound from a certified growth envelope.
struct LaplaceSample {
  L0Scalar xi;
  RNVector value;
  L0Scalar tail_certificate;     // M exp(-(Re xi - tau) s_max) / (Re xi - tau) norm(x)
  L0Scalar quadrature_estimate;  // norm(Q_2n - Q_n) plus a rounding allowance
  L0Scalar envelope_M;
  L0Scalar envelope_tau;
  double s_max = 0.0;
  int panels = 0;
};

LaplaceSample resolve_laplace(const Generator& G, const L0Scalar& xi, const RNVector& x,
                              const LaplaceOptions& opts = {});

/// op_norm(R(xi) - R(eta) - (eta - xi) R(xi) R(eta)).
L0Scalar resolvent_identity_residual(const Generator& G, const L0Scalar& xi, const L0Scalar& eta);

}  // namespace rnsg
