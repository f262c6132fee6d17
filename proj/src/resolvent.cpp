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

#include "rnsg/resolvent.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rnsg/error.hpp"
#include "rnsg/expm.hpp"
#include "rnsg/quadrature.hpp"

namespace rnsg {

L0Scalar spectral_distance(const Generator& G, const L0Scalar& xi) {
  require_same_space(G.space(), xi.space(), "spectral_distance");
  std::vector<double> dist(G.atoms(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < G.atoms(); ++i) {
    const CVector& eig = G.eigenvalues(i);
    for (Eigen::Index k = 0; k < eig.size(); ++k) dist[i] = std::min(dist[i], std::abs(xi[i] - eig(k)));
  }
  return L0Scalar::from_real(G.space(), std::move(dist));
}

std::vector<bool> in_resolvent_set(const Generator& G, const L0Scalar& xi) {
  const auto dist = spectral_distance(G, xi);
  std::vector<bool> out(G.atoms());
  for (std::size_t i = 0; i < G.atoms(); ++i) out[i] = dist.re(i) > 1e-10 * (1.0 + G.norm().re(i));
  return out;
}

ResolventSample resolve_direct(const Generator& G, const L0Scalar& xi) {
  const auto member = in_resolvent_set(G, xi);
  if (!std::all_of(member.begin(), member.end(), [](bool b) { return b; })) {
    const auto dist = spectral_distance(G, xi);
    std::ostringstream os;
    os << "shift meets the spectrum at atoms";
    for (std::size_t i = 0; i < member.size(); ++i) {
      if (!member[i]) os << " [" << i << ": xi=" << xi[i] << " distance=" << dist.re(i) << "]";
    }
    raise(ErrorCode::SingularShift, os.str());
  }
  const auto d = G.dim();
  const CMatrix I = CMatrix::Identity(d, d);
  std::vector<CMatrix> mats(G.atoms());
  std::vector<double> res(G.atoms());
  std::vector<double> err(G.atoms());
  for (std::size_t i = 0; i < G.atoms(); ++i) {
    const CMatrix shifted = xi[i] * I - G.op().at(i);
    mats[i] = shifted.partialPivLu().solve(I);
    Eigen::JacobiSVD<CMatrix> rs(shifted * mats[i] - I);
    Eigen::JacobiSVD<CMatrix> ns(mats[i]);
    res[i] = rs.singularValues()(0);
    err[i] = res[i] < 1.0 ? ns.singularValues()(0) * res[i] / (1.0 - res[i]) : std::numeric_limits<double>::infinity();
  }
  ResolventSample out;
  out.xi = xi;
  out.R = ModuleHom(G.space(), std::move(mats));
  out.residual = L0Scalar::from_real(G.space(), std::move(res));
  out.error_bound = L0Scalar::from_real(G.space(), std::move(err));
  return out;
}

namespace {

struct QuadResult {
  CMatrix value;               // atoms x d
  std::vector<double> weight;  // sum of |w exp(-xi s)| norm(T(s)x) per atom
};

// Composite Gauss-Legendre on [0, s_max]. T(s) at the nodes of a panel is
// T(panel start) exp(c_j A) for the fixed local offsets c_j.
QuadResult laplace_quadrature(const Generator& G, const L0Scalar& xi, const RNVector& x, double s_max, int panels,
                              const GaussRule& rule) {
  const auto d = G.dim();
  const double len = s_max / panels;
  QuadResult out{CMatrix::Zero(x.atoms(), d), std::vector<double>(G.atoms(), 0.0)};
  for (std::size_t i = 0; i < G.atoms(); ++i) {
    const CMatrix& A = G.op().at(i);
    std::vector<CMatrix> local(rule.nodes.size());
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) local[j] = expm((0.5 * len * (1.0 + rule.nodes[j])) * A);
    const CMatrix advance = expm(len * A);
    CVector start = x.row(static_cast<Eigen::Index>(i));
    CVector acc = CVector::Zero(d);
    double wsum = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double s0 = len * p;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double s = s0 + 0.5 * len * (1.0 + rule.nodes[j]);
        const Complex w = 0.5 * len * rule.weights[j] * std::exp(-xi[i] * s);
        const CVector v = local[j] * start;
        acc += w * v;
        wsum += std::abs(w) * v.norm();
      }
      start = advance * start;
    }
    out.value.row(static_cast<Eigen::Index>(i)) = acc.transpose();
    out.weight[i] = wsum;
  }
  return out;
}

}  // namespace

LaplaceSample resolve_laplace(const Generator& G, const L0Scalar& xi, const RNVector& x, const LaplaceOptions& opts) {
  require_same_space(G.space(), xi.space(), "resolve_laplace");
  require_same_space(G.space(), x.space(), "resolve_laplace");
  const std::size_t n = G.atoms();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xi[i].real() - G.spectral_abscissa().re(i) > 0.0)) {
      std::ostringstream os;
      os << "Re xi - abscissa = " << xi[i].real() - G.spectral_abscissa().re(i) << " at atom " << i;
      raise(ErrorCode::NonconvergentIntegral, os.str());
    }
  }

  // Envelope for the tail: the certified one where it sits strictly below
  // Re xi, otherwise a certificate at a tau between the abscissa and Re xi.
  const GrowthEnvelope env = certified_envelope(G);
  std::vector<double> M(n);
  std::vector<double> tau(n);
  for (std::size_t i = 0; i < n; ++i) {
    M[i] = env.M.re(i);
    tau[i] = env.tau.re(i);
  }
  for (const double frac : {0.5, 0.75, 0.875}) {
    std::vector<double> probe(n);
    bool need = false;
    for (std::size_t i = 0; i < n; ++i) {
      const double alpha = G.spectral_abscissa().re(i);
      probe[i] = alpha + frac * (xi[i].real() - alpha);
      if (!(xi[i].real() - tau[i] > 0.0)) need = true;
    }
    if (!need) break;
    const auto alt = certify_envelope_at(G, L0Scalar::from_real(G.space(), probe));
    for (std::size_t i = 0; i < n; ++i) {
      if (!(xi[i].real() - tau[i] > 0.0) && alt.global[i]) {
        tau[i] = probe[i];
        M[i] = alt.M.re(i);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xi[i].real() - tau[i] > 0.0)) {
      raise(ErrorCode::NonconvergentIntegral, "no certified envelope below Re xi at atom " + std::to_string(i));
    }
  }

  double s_max = 0.0;
  if (opts.s_max) {
    s_max = *opts.s_max;
    if (!(s_max > 0.0)) raise(ErrorCode::InvalidArgument, "s_max must be positive");
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double gap = xi[i].real() - tau[i];
      s_max = std::max(s_max, std::log(M[i] / (opts.tail_target * gap)) / gap);
    }
    s_max = std::max(s_max, 1.0);
  }
  int panels = 0;
  if (opts.panels) {
    panels = *opts.panels;
  } else {
    double rate = 0.0;
    for (std::size_t i = 0; i < n; ++i) rate = std::max(rate, std::abs(xi[i]) + G.norm().re(i));
    panels = static_cast<int>(std::min<double>(opts.max_panels, std::ceil(s_max * rate / 2.0)));
  }
  panels = std::max(panels, 1);

  const GaussRule rule = gauss_legendre(opts.points);
  const QuadResult coarse = laplace_quadrature(G, xi, x, s_max, panels, rule);
  const QuadResult fine = laplace_quadrature(G, xi, x, s_max, 2 * panels, rule);
  const auto xn = l0_norm(x);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> tail(n);
  std::vector<double> quad(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double gap = xi[i].real() - tau[i];
    tail[i] = M[i] * std::exp(-gap * s_max) / gap * xn.re(i);
    const auto row = static_cast<Eigen::Index>(i);
    const double diff = (fine.value.row(row) - coarse.value.row(row)).norm();
    const double rounding = 8.0 * eps * (2.0 * panels + static_cast<double>(G.dim()) + 10.0) * fine.weight[i];
    quad[i] = diff + rounding;
  }

  LaplaceSample out;
  out.xi = xi;
  out.value = RNVector(G.space(), fine.value);
  out.tail_certificate = L0Scalar::from_real(G.space(), std::move(tail));
  out.quadrature_estimate = L0Scalar::from_real(G.space(), std::move(quad));
  out.envelope_M = L0Scalar::from_real(G.space(), std::move(M));
  out.envelope_tau = L0Scalar::from_real(G.space(), std::move(tau));
  out.s_max = s_max;
  out.panels = 2 * panels;
  return out;
}

L0Scalar resolvent_identity_residual(const Generator& G, const L0Scalar& xi, const L0Scalar& eta) {
  const ModuleHom rx = resolve_direct(G, xi).R;
  const ModuleHom ry = resolve_direct(G, eta).R;
  const ModuleHom rhs = scalar_mul(eta - xi, compose(rx, ry));
  return op_norm(subtract(subtract(rx, ry), rhs));
}

}  // namespace rnsg
