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

#include "rnsg/semigroup.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rnsg/error.hpp"
#include "rnsg/expm.hpp"
#include "rnsg/quadrature.hpp"

namespace rnsg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double spectral_norm_fast(const CMatrix& P) {
  const CMatrix gram = P.adjoint() * P;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double spectral_norm(const CMatrix& P) {
  if (P.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(P);
  return svd.singularValues()(0);
}

void require_time(double t, const char* what) {
  if (!(t >= 0.0)) raise(ErrorCode::NegativeTime, std::string(what) + " must be nonnegative");
}

struct Sweep {
  bool closed = false;  // certificate covers all t >= 0
  double M = 1.0;
  double horizon = 0.0;
};

// Steps exp(h (A - tau I)) until its norm drops to 1. On each step interval
// norm(T~(t_k + s)) <= norm(T~(t_k)) exp(mu~ s), with mu~ the log norm of
// A - tau I, and once norm(T~(L)) <= 1 the semigroup property bounds every
// later time by the sup over [0, L].
Sweep sweep_atom(const CMatrix& A, double tau, double mu, const EnvelopeOptions& o) {
  const double mu_t = mu - tau;
  if (mu_t <= 0.0) return {true, 1.0, kInf};
  const auto d = A.rows();
  const CMatrix I = CMatrix::Identity(d, d);
  const double h = o.inflation / mu_t;
  const double inflate = std::exp(o.inflation);
  const CMatrix step = expm(h * (A - tau * I));
  CMatrix P = I;
  double gmax = 1.0;
  int k = 1;
  for (; k <= o.max_steps; ++k) {
    P = step * P;
    const double g = spectral_norm_fast(P);
    if (g <= 1.0 + 1e-12) return {true, std::max(1.0, gmax * inflate), kInf};
    gmax = std::max(gmax, g);
    if (!std::isfinite(g) || g > 1e12) break;
  }
  return {false, std::max(1.0, gmax * inflate), h * (k - 1)};
}

// For diagonalizable A with spectrum left of tau, norm(exp(t(A - tau))) is
// bounded by the condition number of the eigenvector matrix.
std::optional<double> eigenbasis_bound(const CMatrix& A, double tau, double abscissa) {
  if (abscissa > tau) return std::nullopt;
  Eigen::ComplexEigenSolver<CMatrix> es(A, true);
  if (es.info() != Eigen::Success) return std::nullopt;
  Eigen::JacobiSVD<CMatrix> svd(es.eigenvectors());
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0)) return std::nullopt;
  const double kappa = s(0) / smin;
  if (!(kappa < 1e6)) return std::nullopt;
  return kappa * (1.0 + 1e-9);
}

// Groups eigenvalues closer than tol and checks rank(A - cI) == d - m for
// every cluster {c, m} selected by `pick`.
template <class Pick>
bool clusters_semisimple(const CMatrix& A, const CVector& eig, double cluster_tol, Pick pick) {
  const auto d = A.rows();
  std::vector<bool> used(static_cast<std::size_t>(eig.size()), false);
  const double anorm = spectral_norm(A);
  const double rank_tol = 1e-8 * anorm;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (used[static_cast<std::size_t>(i)] || !pick(eig(i))) continue;
    Complex centre = 0.0;
    int m = 0;
    for (Eigen::Index j = i; j < eig.size(); ++j) {
      if (!used[static_cast<std::size_t>(j)] && std::abs(eig(j) - eig(i)) <= cluster_tol) {
        used[static_cast<std::size_t>(j)] = true;
        centre += eig(j);
        ++m;
      }
    }
    centre /= static_cast<double>(m);
    Eigen::JacobiSVD<CMatrix> svd(A - centre * CMatrix::Identity(d, d));
    const auto& s = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
      if (s(k) > rank_tol) ++rank;
    }
    if (rank > d - m) return false;
  }
  return true;
}

double axis_tolerance(double anorm) { return 1e-6 * (1.0 + anorm); }
double cluster_tolerance(double anorm) { return 1e-5 * (1.0 + anorm); }

}  // namespace

Generator::Generator(ModuleHom A, std::vector<std::string> labels) : A_(std::move(A)), labels_(std::move(labels)) {
  const std::size_t n = A_.atoms();
  eigenvalues_.resize(n);
  std::vector<double> absc(n, 0.0);
  std::vector<double> lnorm(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const CMatrix& M = A_.at(i);
    if (M.size() == 0) continue;
    Eigen::ComplexEigenSolver<CMatrix> es(M, false);
    eigenvalues_[i] = es.eigenvalues();
    absc[i] = eigenvalues_[i].real().maxCoeff();
    const CMatrix herm = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> hs(herm, Eigen::EigenvaluesOnly);
    lnorm[i] = hs.eigenvalues().maxCoeff();
  }
  abscissa_ = L0Scalar::from_real(A_.space(), std::move(absc));
  log_norm_ = L0Scalar::from_real(A_.space(), std::move(lnorm));
  norm_ = op_norm(A_);
}

std::vector<double> uniform_grid(double t_max, std::size_t points) {
  if (points == 0) raise(ErrorCode::EmptyGrid, "time grid needs at least one point");
  if (!(t_max >= 0.0)) raise(ErrorCode::NegativeTime, "grid end must be nonnegative");
  std::vector<double> g(points);
  if (points == 1) {
    g[0] = t_max;
    return g;
  }
  for (std::size_t k = 0; k < points; ++k) g[k] = t_max * static_cast<double>(k) / static_cast<double>(points - 1);
  return g;
}

ModuleHom evaluate(const Generator& G, double t) {
  require_time(t, "evaluation time");
  if (t == 0.0) return ModuleHom::identity(G.space(), G.dim());
  std::vector<CMatrix> mats(G.atoms());
  for (std::size_t i = 0; i < G.atoms(); ++i) mats[i] = expm(t * G.op().at(i));
  return ModuleHom(G.space(), std::move(mats));
}

L0Scalar semigroup_law_residual(const Generator& G, double s, double t) {
  require_time(s, "s");
  require_time(t, "t");
  return op_norm(subtract(compose(evaluate(G, s), evaluate(G, t)), evaluate(G, s + t)));
}

GeneratorRecovery generator_recovery(const Generator& G, const RNVector& x, std::span<const double> t_schedule) {
  if (t_schedule.empty()) raise(ErrorCode::EmptyGrid, "generator_recovery needs a nonempty schedule");
  for (std::size_t k = 0; k < t_schedule.size(); ++k) {
    if (!(t_schedule[k] > 0.0)) raise(ErrorCode::InvalidArgument, "schedule times must be positive");
    if (k > 0 && !(t_schedule[k] < t_schedule[k - 1])) raise(ErrorCode::InvalidArgument, "schedule must decrease");
  }
  const RNVector ax = apply(G.op(), x);
  GeneratorRecovery out;
  out.schedule.assign(t_schedule.begin(), t_schedule.end());
  for (double t : t_schedule) {
    RNVector q = (apply(evaluate(G, t), x) - x) * Complex(1.0 / t);
    out.residuals.push_back(l0_norm(q - ax));
    out.last_quotient = std::move(q);
  }
  return out;
}

std::string_view strategy_name(EnvelopeStrategy s) noexcept {
  switch (s) {
    case EnvelopeStrategy::Spectral: return "spectral";
    case EnvelopeStrategy::FixedTau: return "fixed_tau";
    case EnvelopeStrategy::Certified: return "certified";
  }
  return "unknown";
}

GrowthEnvelope certify_envelope_at(const Generator& G, const L0Scalar& tau, const EnvelopeOptions& opts) {
  require_same_space(G.space(), tau.space(), "certify_envelope_at");
  const auto taus = tau.real_values();
  const std::size_t n = G.atoms();
  std::vector<double> M(n);
  GrowthEnvelope env;
  env.strategy = EnvelopeStrategy::FixedTau;
  env.global.assign(n, false);
  env.horizon.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Sweep sw = sweep_atom(G.op().at(i), taus[i], G.log_norm().re(i), opts);
    if (!sw.closed) {
      if (auto kappa = eigenbasis_bound(G.op().at(i), taus[i], G.spectral_abscissa().re(i))) {
        sw = {true, std::max(*kappa, 1.0), kInf};
      }
    }
    M[i] = sw.M;
    env.global[i] = sw.closed;
    env.horizon[i] = sw.horizon;
  }
  env.M = L0Scalar::from_real(G.space(), std::move(M));
  env.tau = tau;
  env.note = "certificate by stepped sweep with refinement factor exp(inflation) per step";
  return env;
}

GrowthEnvelope certified_envelope(const Generator& G, const EnvelopeOptions& opts) {
  const std::size_t n = G.atoms();
  const auto semisimple = top_eigenvalues_semisimple(G);
  std::vector<double> M(n, 1.0);
  std::vector<double> tau(n, 0.0);
  GrowthEnvelope env;
  env.strategy = EnvelopeStrategy::Certified;
  env.global.assign(n, true);
  env.horizon.assign(n, kInf);
  for (std::size_t i = 0; i < n; ++i) {
    const CMatrix& A = G.op().at(i);
    const double alpha = G.spectral_abscissa().re(i);
    const double mu = std::max(G.log_norm().re(i), alpha);
    tau[i] = mu;
    M[i] = 1.0;
    if (mu - alpha <= 1e-12 * (1.0 + std::abs(alpha) + std::abs(mu))) continue;
    std::vector<double> candidates;
    if (semisimple[i]) candidates.push_back(alpha);
    for (int k = opts.tau_refinements; k >= 1; --k) candidates.push_back(alpha + (mu - alpha) * std::ldexp(1.0, -k));
    for (double c : candidates) {
      Sweep sw = sweep_atom(A, c, mu, opts);
      if (!sw.closed) {
        if (auto kappa = eigenbasis_bound(A, c, alpha)) sw = {true, std::max(*kappa, 1.0), kInf};
      }
      if (sw.closed) {
        tau[i] = c;
        M[i] = sw.M;
        break;
      }
    }
  }
  env.M = L0Scalar::from_real(G.space(), std::move(M));
  env.tau = L0Scalar::from_real(G.space(), std::move(tau));
  env.note = "smallest certified tau per atom; bound holds for all t >= 0";
  return env;
}

GrowthEnvelope growth_envelope(const Generator& G, std::span<const double> t_grid, const EnvelopeOptions& opts) {
  if (opts.strategy == EnvelopeStrategy::Certified) return certified_envelope(G, opts);
  if (t_grid.empty()) raise(ErrorCode::EmptyGrid, "growth_envelope needs a time grid");
  L0Scalar tau = G.spectral_abscissa();
  if (opts.strategy == EnvelopeStrategy::FixedTau) {
    if (!opts.tau) raise(ErrorCode::InvalidArgument, "fixed_tau strategy needs tau");
    require_same_space(G.space(), opts.tau->space(), "growth_envelope");
    tau = *opts.tau;
  }
  const auto taus = tau.real_values();
  const std::size_t n = G.atoms();
  std::vector<double> M(n, 1.0);
  double tmax = 0.0;
  for (double t : t_grid) {
    require_time(t, "grid time");
    tmax = std::max(tmax, t);
    const auto norms = op_norm(evaluate(G, t));
    for (std::size_t i = 0; i < n; ++i) M[i] = std::max(M[i], norms.re(i) * std::exp(-taus[i] * t));
  }
  GrowthEnvelope env;
  env.strategy = opts.strategy;
  env.M = L0Scalar::from_real(G.space(), std::move(M));
  env.tau = tau;
  env.global.assign(n, false);
  env.horizon.assign(n, tmax);
  std::ostringstream os;
  os << "M certified on sampled range [0, " << tmax << "] only; beyond it the bound is extrapolated from tau";
  env.note = os.str();
  return env;
}

bool AsuReport::all_bounded() const {
  return std::all_of(bounded.begin(), bounded.end(), [](bool b) { return b; });
}

std::vector<bool> top_eigenvalues_semisimple(const Generator& G) {
  std::vector<bool> out(G.atoms(), true);
  for (std::size_t i = 0; i < G.atoms(); ++i) {
    const double anorm = G.norm().re(i);
    const double alpha = G.spectral_abscissa().re(i);
    const double tol = axis_tolerance(anorm);
    out[i] = clusters_semisimple(G.op().at(i), G.eigenvalues(i), cluster_tolerance(anorm),
                                 [&](Complex z) { return z.real() >= alpha - tol; });
  }
  return out;
}

AsuReport is_asu_bounded(const Generator& G) {
  const std::size_t n = G.atoms();
  AsuReport rep;
  rep.bounded.assign(n, false);
  rep.sup.assign(n, kInf);
  rep.sup_certified.assign(n, false);
  EnvelopeOptions opts;
  opts.inflation = 1e-3;
  opts.max_steps = 20000;
  for (std::size_t i = 0; i < n; ++i) {
    const CMatrix& A = G.op().at(i);
    const double anorm = G.norm().re(i);
    const double alpha = G.spectral_abscissa().re(i);
    const double tol = axis_tolerance(anorm);
    bool bounded = false;
    if (alpha < -tol) {
      bounded = true;
    } else if (alpha <= tol) {
      bounded = clusters_semisimple(A, G.eigenvalues(i), cluster_tolerance(anorm),
                                     [&](Complex z) { return std::abs(z.real()) <= tol; });
    }
    rep.bounded[i] = bounded;
    if (!bounded) continue;
    Sweep sw = sweep_atom(A, 0.0, G.log_norm().re(i), opts);
    if (!sw.closed) {
      if (auto kappa = eigenbasis_bound(A, 0.0, std::min(alpha, 0.0))) sw = {true, std::max(*kappa, 1.0), kInf};
    }
    rep.sup[i] = sw.M;
    rep.sup_certified[i] = sw.closed;
  }
  return rep;
}

AsBoundReport is_as_bounded(const Generator& G, double L, double inflation) {
  if (!(L > 0.0)) raise(ErrorCode::InvalidArgument, "L must be positive");
  const std::size_t n = G.atoms();
  std::vector<double> bound(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = G.log_norm().re(i);
    if (mu <= 0.0) continue;
    constexpr double kMaxSteps = 1e5;
    double h = inflation / mu;
    if (L / h > kMaxSteps) h = L / kMaxSteps;
    const double inflate = std::exp(mu * h);
    const auto d = G.dim();
    const CMatrix step = expm(h * G.op().at(i));
    CMatrix P = CMatrix::Identity(d, d);
    double gmax = 1.0;
    const auto intervals = static_cast<long>(std::ceil(L / h));
    for (long k = 0; k < intervals; ++k) {
      gmax = std::max(gmax, spectral_norm_fast(P));
      P = step * P;
    }
    bound[i] = gmax * inflate;
  }
  AsBoundReport rep;
  rep.bounded.assign(n, true);
  rep.bound = L0Scalar::from_real(G.space(), std::move(bound));
  return rep;
}

Generator rescale(const Generator& G, const L0Scalar& tau) {
  require_same_space(G.space(), tau.space(), "rescale");
  return Generator(subtract(G.op(), ModuleHom::scalar(tau, G.dim())), G.labels());
}

DerivativeResiduals orbit_derivative_residuals(const Generator& G, const RNVector& x, double t,
                                               std::optional<double> h) {
  require_time(t, "t");
  const double step = h.value_or(1e-4 * (1.0 + t));
  if (!(step > 0.0)) raise(ErrorCode::InvalidArgument, "difference step must be positive");
  const RNVector tx = apply(evaluate(G, t), x);
  const RNVector atx = apply(G.op(), tx);
  RNVector deriv;
  if (t >= step) {
    deriv = (apply(evaluate(G, t + step), x) - apply(evaluate(G, t - step), x)) * Complex(0.5 / step);
  } else {
    deriv = (apply(evaluate(G, t + step), x) * Complex(4.0) - tx * Complex(3.0) -
             apply(evaluate(G, t + 2.0 * step), x)) *
            Complex(0.5 / step);
  }
  DerivativeResiduals out;
  out.step = step;
  out.difference = l0_norm(deriv - atx);
  out.commutator = l0_norm(atx - apply(evaluate(G, t), apply(G.op(), x)));
  return out;
}

L0Scalar ftc_residual(const Generator& G, const RNVector& x, double r, int panels, int points) {
  if (!(r > 0.0)) raise(ErrorCode::InvalidArgument, "r must be positive");
  const auto rule = composite_gauss(0.0, r, panels, gauss_legendre(points));
  const RNVector ax = apply(G.op(), x);
  RNVector integral = RNVector::zero(x.space(), x.dim());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    integral += apply(evaluate(G, rule.nodes[k]), ax) * Complex(rule.weights[k]);
  }
  return l0_norm(apply(evaluate(G, r), x) - x - integral);
}

LipschitzReport orbit_lipschitz_constant(const Generator& G, const RNVector& x, double r,
                                         std::span<const double> grid) {
  if (!(r > 0.0)) raise(ErrorCode::InvalidArgument, "r must be positive");
  if (grid.size() < 2) raise(ErrorCode::EmptyGrid, "orbit_lipschitz_constant needs at least two grid points");
  std::vector<RNVector> orbit;
  orbit.reserve(grid.size());
  for (double t : grid) {
    if (t < 0.0 || t > r) raise(ErrorCode::OutOfDomain, "grid point outside [0, r]");
    orbit.push_back(apply(evaluate(G, t), x));
  }
  const std::size_t n = G.atoms();
  std::vector<double> lip(n, 0.0);
  for (std::size_t a = 0; a < grid.size(); ++a) {
    for (std::size_t b = 0; b < grid.size(); ++b) {
      if (!(grid[a] > grid[b])) continue;
      const auto q = l0_norm(orbit[a] - orbit[b]);
      const double dt = grid[a] - grid[b];
      for (std::size_t i = 0; i < n; ++i) lip[i] = std::max(lip[i], q.re(i) / dt);
    }
  }

  // The bound requires tau >= 0; raising tau keeps a certified M valid.
  const GrowthEnvelope env = certified_envelope(G);
  std::vector<double> taup(n);
  for (std::size_t i = 0; i < n; ++i) taup[i] = std::max(env.tau.re(i), 0.0);
  const L0Scalar tau = L0Scalar::from_real(G.space(), taup);
  const Generator shifted = rescale(G, tau);
  const auto atx = l0_norm(apply(shifted.op(), x));
  const auto xn = l0_norm(x);
  std::vector<double> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double M = env.M.re(i);
    bound[i] = std::exp(2.0 * taup[i] * r) * M * (M * atx.re(i) + taup[i] * xn.re(i));
  }
  LipschitzReport rep;
  rep.constant = L0Scalar::from_real(G.space(), std::move(lip));
  rep.bound = L0Scalar::from_real(G.space(), std::move(bound));
  rep.M = env.M;
  rep.tau = tau;
  return rep;
}

}  // namespace rnsg
