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

#include "rnsg/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rnsg/error.hpp"

namespace rnsg {

namespace {

void validate_eta(const Generator& G, const L0Scalar& eta) {
  require_same_space(G.space(), eta.space(), "eta_norm");
  if (!eta.is_real() || !is_strictly_positive(eta)) {
    raise(ErrorCode::NotStrictlyPositive, "eta must be real and strictly positive at every atom");
  }
}

}  // namespace

EtaNormResult eta_norm(const Generator& G, const L0Scalar& eta, const RNVector& x, const EtaNormOptions& opts) {
  validate_eta(G, eta);
  if (opts.n_max < 0 || opts.stabilization_k < 1) raise(ErrorCode::InvalidArgument, "invalid truncation parameters");
  const ModuleHom step = scalar_mul(eta, resolve_direct(G, eta).R);
  const std::size_t n = G.atoms();
  const auto d = G.dim();
  std::vector<double> best(n);
  std::vector<double> pbound(n, 1.0);
  EtaNormResult out;
  out.stabilized.assign(n, false);
  out.argmax.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const CMatrix& S = step.at(i);
    CMatrix P = CMatrix::Identity(d, d);
    CVector y = x.row(static_cast<Eigen::Index>(i));
    best[i] = y.norm();
    int last_growth = 0;
    for (int k = 1; k <= opts.n_max; ++k) {
      y = S * y;
      P = S * P;
      const double v = y.norm();
      if (v > best[i] * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) last_growth = k;
      if (v > best[i]) {
        best[i] = v;
        out.argmax[i] = k;
      }
      Eigen::JacobiSVD<CMatrix> svd(P);
      pbound[i] = std::max(pbound[i], svd.singularValues()(0));
    }
    out.stabilized[i] = opts.n_max - last_growth >= opts.stabilization_k;
  }
  out.value = L0Scalar::from_real(G.space(), std::move(best));
  out.power_bound = L0Scalar::from_real(G.space(), std::move(pbound));
  out.tail_flag = std::all_of(out.stabilized.begin(), out.stabilized.end(), [](bool b) { return b; });
  return out;
}

BarNormResult bar_norm(const Generator& G, const RNVector& x, std::span<const L0Scalar> eta_grid,
                       const EtaNormOptions& opts) {
  if (eta_grid.empty()) raise(ErrorCode::EmptyGrid, "bar_norm needs a nonempty eta grid");
  for (std::size_t k = 0; k < eta_grid.size(); ++k) {
    validate_eta(G, eta_grid[k]);
    if (k > 0 && !l0_leq(eta_grid[k - 1], eta_grid[k])) {
      raise(ErrorCode::InvalidArgument, "eta grid must be increasing at every atom");
    }
  }
  BarNormResult out;
  out.tail_flag = true;
  for (const auto& eta : eta_grid) {
    auto r = eta_norm(G, eta, x, opts);
    out.tail_flag = out.tail_flag && r.tail_flag;
    out.per_eta.push_back(std::move(r.value));
  }
  out.value = l0_sup(out.per_eta);
  out.top_value = out.per_eta.back();
  out.collapse_gap = out.value - out.top_value;
  out.collapse_ok = true;
  for (std::size_t i = 0; i < G.atoms(); ++i) {
    if (out.collapse_gap.re(i) > 1e-9 * (1.0 + out.top_value.re(i))) out.collapse_ok = false;
  }
  return out;
}

ContractionCheck contraction_check(const Generator& G, const L0Scalar& xi, const RNVector& x,
                                   std::span<const L0Scalar> eta_grid, const EtaNormOptions& opts, double tolerance) {
  validate_eta(G, xi);
  if (eta_grid.empty()) raise(ErrorCode::EmptyGrid, "contraction_check needs a nonempty eta grid");
  std::vector<L0Scalar> grid(eta_grid.begin(), eta_grid.end());
  const L0Scalar top = l0_max(grid.back(), xi);
  if (!l0_leq(top, grid.back())) grid.push_back(top);
  const RNVector y = apply(scalar_mul(xi, resolve_direct(G, xi).R), x);
  const auto lhs = bar_norm(G, y, grid, opts);
  const auto rhs = bar_norm(G, x, grid, opts);
  ContractionCheck out;
  out.lhs = lhs.value;
  out.rhs = rhs.value;
  out.margin = lhs.value - rhs.value;
  out.tail_flag = lhs.tail_flag && rhs.tail_flag;
  out.ok = true;
  for (std::size_t i = 0; i < G.atoms(); ++i) {
    if (out.margin.re(i) > tolerance * (1.0 + out.rhs.re(i))) out.ok = false;
  }
  return out;
}

OrbitNormResult orbit_sup_norm(const Generator& G, const RNVector& x, std::span<const double> t_grid) {
  const AsuReport asu = is_asu_bounded(G);
  if (!asu.all_bounded()) raise(ErrorCode::NotAsuBounded, "orbit_sup_norm needs an a.s.u. bounded semigroup");
  std::vector<double> grid(t_grid.begin(), t_grid.end());
  grid.push_back(0.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.front() < 0.0) raise(ErrorCode::NegativeTime, "grid times must be nonnegative");

  const std::size_t n = G.atoms();
  std::vector<double> value(n, 0.0);
  std::vector<double> upper(n, 0.0);
  L0Scalar last_norm;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto norms = l0_norm(apply(evaluate(G, grid[k]), x));
    const double gap = k + 1 < grid.size() ? grid[k + 1] - grid[k] : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      value[i] = std::max(value[i], norms.re(i));
      const double mu = std::max(G.log_norm().re(i), 0.0);
      upper[i] = std::max(upper[i], norms.re(i) * std::exp(mu * gap));
    }
    last_norm = norms;
  }
  std::vector<double> tail(n);
  OrbitNormResult out;
  out.tail_dominated.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    tail[i] = asu.sup[i] * last_norm.re(i);
    out.tail_dominated[i] = asu.sup_certified[i] && tail[i] <= value[i];
    upper[i] = std::max(upper[i], asu.sup_certified[i] ? tail[i] : std::numeric_limits<double>::infinity());
  }
  out.value = L0Scalar::from_real(G.space(), std::move(value));
  out.upper = L0Scalar::from_real(G.space(), std::move(upper));
  out.tail_bound = L0Scalar::from_real(G.space(), std::move(tail));
  return out;
}

}  // namespace rnsg
