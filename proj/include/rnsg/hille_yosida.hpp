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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rnsg/resolvent.hpp"

namespace rnsg {

/// One evaluated inequality. For condition (a), `t` is the time and `n` is 0;
/// for (b) and (c), `xi` is the shift and `n` the resolvent power.
struct MarginEntry {
  std::size_t sample = 0;
  std::size_t atom = 0;
  int n = 0;
  double t = 0.0;
  Complex xi = 0.0;
  double value = 0.0;  // left-hand side of the inequality
  double bound = 0.0;  // right-hand side
  double margin = 0.0;  // value - bound
  bool in_resolvent_set = true;
};

struct ConditionReport {
  std::string name;
  std::vector<bool> pass;                // per atom
  std::vector<MarginEntry> worst;        // per atom, largest margin
  std::vector<MarginEntry> violations;   // first `max_recorded` violations
  std::size_t violation_count = 0;
  std::vector<double> tolerance;         // per atom
  std::vector<MarginEntry> table;        // every evaluated entry
  [[nodiscard]] bool passed() const;
  /// Largest margin relative to the bound over the whole table.
  [[nodiscard]] double worst_relative_margin() const;
};

struct CheckOptions {
  double tolerance = 1e-9;
  std::size_t max_recorded = 64;
};

/// max over the grid of norm(T(t)) - M exp(tau t); passes iff <= tolerance * M.
ConditionReport check_condition_a(const Generator& G, const L0Scalar& M, const L0Scalar& tau,
                                  std::span<const double> t_grid, const CheckOptions& opts = {});

/// norm([(xi - tau) R(xi)]^n) - M for n = 1..n_max; passes iff <= tolerance (1 + M).
/// Throws ShiftNotAdmissible unless xi is real with xi - tau > 0 everywhere.
ConditionReport check_condition_b(const Generator& G, const L0Scalar& M, const L0Scalar& tau,
                                  std::span<const L0Scalar> xi_samples, int n_max, const CheckOptions& opts = {});

/// norm(R(xi)^n) (Re xi - tau)^n - M for n = 1..n_max on complex shifts.
ConditionReport check_condition_c(const Generator& G, const L0Scalar& M, const L0Scalar& tau,
                                  std::span<const L0Scalar> xi_samples, int n_max, const CheckOptions& opts = {});

/// Shift sampling: real parts tau + delta with delta log-spaced on
/// [delta_min, delta_max]; complex samples add each imaginary offset.
/// `random_shifts` extra samples use an independent delta per atom.
struct ShiftSampling {
  double delta_min = 1e-2;
  double delta_max = 1e2;
  int real_points = 9;
  std::vector<double> imag_offsets{0.0, 1.0, -1.0, 10.0, -10.0};
  int random_shifts = 3;
  std::uint64_t seed = 0;
};

std::vector<L0Scalar> real_shift_samples(const L0Scalar& tau, const ShiftSampling& s);
std::vector<L0Scalar> complex_shift_samples(const L0Scalar& tau, const ShiftSampling& s);

struct HYConfig {
  std::vector<double> t_grid;
  ShiftSampling sampling;
  int n_max = 32;
  CheckOptions check;
  EnvelopeOptions envelope = [] {
    EnvelopeOptions o;
    o.strategy = EnvelopeStrategy::Certified;
    return o;
  }();
  /// Supplied (M, tau) replace the computed envelope.
  std::optional<L0Scalar> M;
  std::optional<L0Scalar> tau;
};

struct HYReport {
  GrowthEnvelope envelope;
  ConditionReport condition_a;
  ConditionReport condition_b;
  ConditionReport condition_c;
  bool consistent = false;       // every condition passed
  bool directional_ok = false;   // (a) passing implies (b) and (c) passing, per atom
  std::string verdict;           // "consistent" or "violated"
  std::vector<std::string> locations;
};

HYReport full_report(const Generator& G, const HYConfig& cfg);

}  // namespace rnsg
