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

#include "rnsg/hille_yosida.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rnsg/error.hpp"
#include "rnsg/random.hpp"

namespace rnsg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sigma_max(const CMatrix& P) {
  Eigen::JacobiSVD<CMatrix> svd(P);
  return svd.singularValues()(0);
}

ConditionReport empty_report(std::string name, std::size_t atoms) {
  ConditionReport r;
  r.name = std::move(name);
  r.pass.assign(atoms, true);
  r.worst.resize(atoms);
  for (std::size_t i = 0; i < atoms; ++i) {
    r.worst[i].atom = i;
    r.worst[i].margin = -kInf;
  }
  return r;
}

void record(ConditionReport& r, const MarginEntry& e, const CheckOptions& opts) {
  r.table.push_back(e);
  if (e.margin > r.worst[e.atom].margin) r.worst[e.atom] = e;
  if (e.margin > r.tolerance[e.atom]) {
    r.pass[e.atom] = false;
    ++r.violation_count;
    if (r.violations.size() < opts.max_recorded) r.violations.push_back(e);
  }
}

void require_envelope(const Generator& G, const L0Scalar& M, const L0Scalar& tau) {
  require_same_space(G.space(), M.space(), "envelope M");
  require_same_space(G.space(), tau.space(), "envelope tau");
  if (!M.is_real() || !tau.is_real()) raise(ErrorCode::ComplexValued, "M and tau must be real");
}

// Shared body of (b) and (c): margins of norm((s R(xi))^n) - M where s is
// xi - tau for real shifts and Re xi - tau for complex ones.
ConditionReport power_condition(const Generator& G, const L0Scalar& M, const L0Scalar& tau,
                                std::span<const L0Scalar> samples, int n_max, const CheckOptions& opts,
                                bool real_only) {
  require_envelope(G, M, tau);
  if (samples.empty()) raise(ErrorCode::EmptyGrid, "no shift samples");
  if (n_max < 1) raise(ErrorCode::InvalidArgument, "n_max must be at least 1");
  const std::size_t atoms = G.atoms();
  ConditionReport r = empty_report(real_only ? "b" : "c", atoms);
  for (std::size_t i = 0; i < atoms; ++i) r.tolerance.push_back(opts.tolerance * (1.0 + M.re(i)));
  const auto d = G.dim();
  const CMatrix I = CMatrix::Identity(d, d);
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const L0Scalar& xi = samples[k];
    require_same_space(G.space(), xi.space(), "shift sample");
    if (real_only && !xi.is_real()) raise(ErrorCode::ShiftNotAdmissible, "shift samples for (b) must be real");
    for (std::size_t i = 0; i < atoms; ++i) {
      const double s = xi[i].real() - tau.re(i);
      if (!(s > 0.0)) {
        std::ostringstream msg;
        msg << "Re xi - tau = " << s << " at atom " << i << " of sample " << k;
        raise(ErrorCode::ShiftNotAdmissible, msg.str());
      }
    }
    const auto inside = in_resolvent_set(G, xi);
    for (std::size_t i = 0; i < atoms; ++i) {
      MarginEntry e;
      e.sample = k;
      e.atom = i;
      e.xi = xi[i];
      e.bound = M.re(i);
      if (!inside[i]) {
        e.n = 1;
        e.value = kInf;
        e.margin = kInf;
        e.in_resolvent_set = false;
        record(r, e, opts);
        continue;
      }
      const double s = xi[i].real() - tau.re(i);
      const CMatrix S = Complex(s) * (xi[i] * I - G.op().at(i)).partialPivLu().solve(I);
      CMatrix P = I;
      for (int n = 1; n <= n_max; ++n) {
        P = S * P;
        e.n = n;
        e.value = sigma_max(P);
        e.margin = e.value - e.bound;
        record(r, e, opts);
      }
    }
  }
  return r;
}

std::string describe(const MarginEntry& e, const std::string& cond) {
  std::ostringstream os;
  os.precision(12);
  os << "condition (" << cond << ") atom " << e.atom;
  if (cond == "a") {
    os << " t=" << e.t;
  } else {
    os << " sample " << e.sample << " xi=" << e.xi.real();
    if (e.xi.imag() != 0.0) os << (e.xi.imag() < 0 ? "" : "+") << e.xi.imag() << "i";
    os << " n=" << e.n;
    if (!e.in_resolvent_set) os << " (xi in spectrum)";
  }
  os << " margin=" << e.margin;
  return os.str();
}

std::vector<double> log_spaced(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi >= lo) || points < 1) raise(ErrorCode::InvalidArgument, "invalid shift range");
  std::vector<double> out;
  if (points == 1) return {lo};
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int k = 0; k < points; ++k) out.push_back(std::exp(a + (b - a) * k / (points - 1)));
  return out;
}

}  // namespace

bool ConditionReport::passed() const {
  return std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });
}

double ConditionReport::worst_relative_margin() const {
  double w = -kInf;
  for (const auto& e : table) w = std::max(w, e.bound > 0.0 ? e.margin / e.bound : e.margin);
  return w;
}

ConditionReport check_condition_a(const Generator& G, const L0Scalar& M, const L0Scalar& tau,
                                  std::span<const double> t_grid, const CheckOptions& opts) {
  require_envelope(G, M, tau);
  if (t_grid.empty()) raise(ErrorCode::EmptyGrid, "condition (a) needs a nonempty time grid");
  const std::size_t atoms = G.atoms();
  ConditionReport r = empty_report("a", atoms);
  for (std::size_t i = 0; i < atoms; ++i) r.tolerance.push_back(opts.tolerance * M.re(i));
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const double t = t_grid[k];
    const auto norms = op_norm(evaluate(G, t));
    for (std::size_t i = 0; i < atoms; ++i) {
      MarginEntry e;
      e.sample = k;
      e.atom = i;
      e.t = t;
      e.value = norms.re(i);
      e.bound = M.re(i) * std::exp(tau.re(i) * t);
      e.margin = e.value - e.bound;
      record(r, e, opts);
    }
  }
  return r;
}

ConditionReport check_condition_b(const Generator& G, const L0Scalar& M, const L0Scalar& tau,
                                  std::span<const L0Scalar> xi_samples, int n_max, const CheckOptions& opts) {
  return power_condition(G, M, tau, xi_samples, n_max, opts, true);
}

ConditionReport check_condition_c(const Generator& G, const L0Scalar& M, const L0Scalar& tau,
                                  std::span<const L0Scalar> xi_samples, int n_max, const CheckOptions& opts) {
  return power_condition(G, M, tau, xi_samples, n_max, opts, false);
}

std::vector<L0Scalar> real_shift_samples(const L0Scalar& tau, const ShiftSampling& s) {
  std::vector<L0Scalar> out;
  const auto& space = tau.space();
  for (double delta : log_spaced(s.delta_min, s.delta_max, s.real_points)) {
    out.push_back(tau.real_part() + L0Scalar::constant(space, delta));
  }
  Rng rng(s.seed);
  const double a = std::log(s.delta_min);
  const double b = std::log(s.delta_max);
  for (int k = 0; k < s.random_shifts; ++k) {
    std::vector<double> delta(space.size());
    for (auto& v : delta) v = std::exp(rng.uniform(a, b));
    out.push_back(tau.real_part() + L0Scalar::from_real(space, std::move(delta)));
  }
  return out;
}

std::vector<L0Scalar> complex_shift_samples(const L0Scalar& tau, const ShiftSampling& s) {
  std::vector<L0Scalar> out;
  const auto& space = tau.space();
  for (double delta : log_spaced(s.delta_min, s.delta_max, s.real_points)) {
    for (double im : s.imag_offsets) {
      out.push_back(tau.real_part() + L0Scalar::constant(space, Complex(delta, im)));
    }
  }
  // Separate stream from the real samples so the two families are independent.
  Rng rng(s.seed ^ 0x9e3779b97f4a7c15ULL);
  const double a = std::log(s.delta_min);
  const double b = std::log(s.delta_max);
  double im_span = 0.0;
  for (double im : s.imag_offsets) im_span = std::max(im_span, std::abs(im));
  if (im_span == 0.0) im_span = 1.0;
  for (int k = 0; k < s.random_shifts; ++k) {
    std::vector<Complex> v(space.size());
    for (auto& z : v) {
      const double re = std::exp(rng.uniform(a, b));
      z = Complex(re, rng.uniform(-im_span, im_span));
    }
    out.push_back(tau.real_part() + L0Scalar(space, std::move(v)));
  }
  return out;
}

HYReport full_report(const Generator& G, const HYConfig& cfg) {
  HYReport rep;
  if (cfg.M && cfg.tau) {
    rep.envelope.M = *cfg.M;
    rep.envelope.tau = *cfg.tau;
    rep.envelope.strategy = EnvelopeStrategy::FixedTau;
    rep.envelope.global.assign(G.atoms(), false);
    rep.envelope.horizon.assign(G.atoms(), 0.0);
    rep.envelope.note = "supplied";
  } else if (cfg.tau) {
    rep.envelope = certify_envelope_at(G, *cfg.tau, cfg.envelope);
  } else if (cfg.M) {
    raise(ErrorCode::InvalidArgument, "an envelope override needs tau when M is given");
  } else {
    rep.envelope = growth_envelope(G, cfg.t_grid, cfg.envelope);
  }
  for (std::size_t i = 0; i < G.atoms(); ++i) {
    if (rep.envelope.M.re(i) < 1.0) raise(ErrorCode::InvalidArgument, "M must be at least 1 at every atom");
  }
  const auto& M = rep.envelope.M;
  const auto& tau = rep.envelope.tau;
  rep.condition_a = check_condition_a(G, M, tau, cfg.t_grid, cfg.check);
  const auto real_xi = real_shift_samples(tau, cfg.sampling);
  const auto complex_xi = complex_shift_samples(tau, cfg.sampling);
  rep.condition_b = check_condition_b(G, M, tau, real_xi, cfg.n_max, cfg.check);
  rep.condition_c = check_condition_c(G, M, tau, complex_xi, cfg.n_max, cfg.check);

  rep.directional_ok = true;
  for (std::size_t i = 0; i < G.atoms(); ++i) {
    if (rep.condition_a.pass[i] && !(rep.condition_b.pass[i] && rep.condition_c.pass[i])) {
      rep.directional_ok = false;
      rep.locations.push_back("directional inconsistency at atom " + std::to_string(i) +
                              ": (a) holds but (b) or (c) fails");
    }
  }
  // One location per failing (condition, atom): its worst entry.
  for (const auto* c : {&rep.condition_a, &rep.condition_b, &rep.condition_c}) {
    for (std::size_t i = 0; i < G.atoms(); ++i) {
      if (!c->pass[i]) rep.locations.push_back(describe(c->worst[i], c->name));
    }
  }
  rep.consistent = rep.condition_a.passed() && rep.condition_b.passed() && rep.condition_c.passed();
  rep.verdict = rep.consistent && rep.directional_ok ? "consistent" : "violated";
  return rep;
}

}  // namespace rnsg
