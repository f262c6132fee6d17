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
#include <string>
#include <vector>

#include "rnsg/operators.hpp"

namespace rnsg {

/// Infinitesimal generator A of T(t) = exp(tA). Every generator here is a
/// bounded module homomorphism, so its domain is the whole module. Spectral
/// data is computed once at construction.
class Generator {
 public:
  Generator() = default;
  explicit Generator(ModuleHom A, std::vector<std::string> labels = {});

  [[nodiscard]] const ModuleHom& op() const noexcept { return A_; }
  [[nodiscard]] const AtomSpace& space() const noexcept { return A_.space(); }
  [[nodiscard]] Eigen::Index dim() const noexcept { return A_.dim(); }
  [[nodiscard]] std::size_t atoms() const noexcept { return A_.atoms(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// max Re(lambda) over the eigenvalues of each atom's matrix.
  [[nodiscard]] const L0Scalar& spectral_abscissa() const noexcept { return abscissa_; }
  /// Largest eigenvalue of the Hermitian part (A + A*)/2, so that
  /// norm(exp(tA)) <= exp(log_norm * t).
  [[nodiscard]] const L0Scalar& log_norm() const noexcept { return log_norm_; }
  [[nodiscard]] const L0Scalar& norm() const noexcept { return norm_; }
  [[nodiscard]] const CVector& eigenvalues(std::size_t atom) const { return eigenvalues_[atom]; }

 private:
  ModuleHom A_;
  std::vector<std::string> labels_;
  std::vector<CVector> eigenvalues_;
  L0Scalar abscissa_;
  L0Scalar log_norm_;
  L0Scalar norm_;
};

std::vector<double> uniform_grid(double t_max, std::size_t points);

/// T(t) at every atom. T(0) is the identity exactly.
ModuleHom evaluate(const Generator& G, double t);

/// op_norm(T(s)T(t) - T(s+t)).
L0Scalar semigroup_law_residual(const Generator& G, double s, double t);

struct GeneratorRecovery {
  RNVector last_quotient;          // (T(t)x - x)/t at the last schedule point
  std::vector<double> schedule;
  std::vector<L0Scalar> residuals;  // norm((T(t)x - x)/t - Ax) per schedule point
};

/// Difference quotients on a decreasing schedule of positive times.
GeneratorRecovery generator_recovery(const Generator& G, const RNVector& x, std::span<const double> t_schedule);

enum class EnvelopeStrategy {
  Spectral,   // tau = spectral abscissa, M = grid supremum
  FixedTau,   // caller-supplied tau, M = grid supremum
  Certified,  // smallest tau admitting a certificate valid for all t >= 0
};

std::string_view strategy_name(EnvelopeStrategy s) noexcept;

struct EnvelopeOptions {
  EnvelopeStrategy strategy = EnvelopeStrategy::Spectral;
  std::optional<L0Scalar> tau;  // required for FixedTau
  /// Step size of the certified sweep is inflation / (log_norm - tau), so the
  /// refinement factor between grid points is exp(inflation).
  double inflation = 2e-2;
  int max_steps = 2000;
  /// Dyadic refinements tau = abscissa + (log_norm - abscissa) * 2^-k tried
  /// before the log-norm fallback.
  int tau_refinements = 5;
};

/// norm(T(t)) <= M exp(tau t). `global[i]` is true when the bound at atom i
/// is certified for every t >= 0; otherwise it is only asserted on
/// [0, horizon[i]].
struct GrowthEnvelope {
  L0Scalar M;
  L0Scalar tau;
  EnvelopeStrategy strategy = EnvelopeStrategy::Spectral;
  std::vector<bool> global;
  std::vector<double> horizon;
  std::string note;
};

GrowthEnvelope growth_envelope(const Generator& G, std::span<const double> t_grid, const EnvelopeOptions& opts = {});

/// Certified envelope at a given tau: M bounds sup_{t>=0} norm(T(t)) exp(-tau t)
/// wherever `global` is set. Atoms without a certificate report the sup over
/// the swept range.
GrowthEnvelope certify_envelope_at(const Generator& G, const L0Scalar& tau, const EnvelopeOptions& opts = {});

/// Certified envelope with the smallest admissible tau per atom.
GrowthEnvelope certified_envelope(const Generator& G, const EnvelopeOptions& opts = {});

struct AsuReport {
  std::vector<bool> bounded;
  /// Certified upper bound on sup_{t>=0} norm(T(t)); +inf where unbounded.
  std::vector<double> sup;
  std::vector<bool> sup_certified;
  [[nodiscard]] bool all_bounded() const;
};

/// Decided spectrally: bounded iff abscissa <= 0 and every eigenvalue on the
/// imaginary axis is semisimple.
AsuReport is_asu_bounded(const Generator& G);

struct AsBoundReport {
  std::vector<bool> bounded;  // always true for bounded generators
  L0Scalar bound;             // certified sup over [0, L] of norm(T(t))
};
AsBoundReport is_as_bounded(const Generator& G, double L, double inflation = 1e-3);

/// True where the eigenvalues with maximal real part are semisimple.
std::vector<bool> top_eigenvalues_semisimple(const Generator& G);

/// Generator A - tau I of exp(-tau t) T(t).
Generator rescale(const Generator& G, const L0Scalar& tau);

struct DerivativeResiduals {
  L0Scalar difference;  // norm(finite-difference derivative - A T(t) x)
  L0Scalar commutator;  // norm(A T(t) x - T(t) A x)
  double step = 0.0;
};

/// Central difference with step h (default 1e-4 (1 + t)); a one-sided
/// second-order stencil is used when t < h.
DerivativeResiduals orbit_derivative_residuals(const Generator& G, const RNVector& x, double t,
                                               std::optional<double> h = std::nullopt);

/// norm(T(r)x - x - Q) with Q the composite Gauss-Legendre approximation of
/// the integral of T(s)Ax over [0, r]; the rule has order 2 * points.
L0Scalar ftc_residual(const Generator& G, const RNVector& x, double r, int panels, int points = 2);

struct LipschitzReport {
  L0Scalar constant;  // sup over grid pairs of the orbit difference quotient
  L0Scalar bound;     // exp(2 tau r) M (M norm(A_tilde x) + tau norm(x))
  L0Scalar M;
  L0Scalar tau;
};

LipschitzReport orbit_lipschitz_constant(const Generator& G, const RNVector& x, double r,
                                         std::span<const double> grid);

}  // namespace rnsg
