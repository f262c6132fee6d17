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

#include "rnsg/commands.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "rnsg/error.hpp"
#include "rnsg/random.hpp"

namespace rnsg {

namespace {

namespace ce = counterexample;

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

Json margin_list(const L0Scalar& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) j.push_back(number_json(m.re(i)));
  return j;
}

bool within(const L0Scalar& margin, const L0Scalar& scale, double tol) {
  for (std::size_t i = 0; i < margin.size(); ++i) {
    if (margin.re(i) > tol * (1.0 + scale.re(i))) return false;
  }
  return true;
}

RNVector config_vector(const RunConfig& cfg, const AtomSpace& space, Eigen::Index d) {
  if (cfg.x) return vector_from_json(*cfg.x, space);
  return RNVector(space, CMatrix::Ones(static_cast<Eigen::Index>(space.size()), d));
}

}  // namespace

Json make_report(const std::string& command, const RunConfig& cfg, Json results) {
  Json r;
  r["schema_version"] = kSchemaVersion;
  r["header"] = {{"tool", "rnsg"}, {"version", "0.1.0"}, {"generated_at", utc_now()}};
  Json body;
  body["command"] = command;
  body["seed"] = cfg.seed;
  body["config"] = resolved_json(cfg);
  body["results"] = std::move(results);
  r["body"] = std::move(body);
  return r;
}

std::string body_text(const Json& report) { return dump(report.at("body")); }

CommandResult cmd_verify_hy(const RunConfig& cfg) {
  const Generator G = cfg.generator();
  const HYConfig hy = cfg.hy_config();
  const HYReport rep = full_report(G, hy);
  Json results = to_json(rep);
  results["sampling"] = {{"t_points", hy.t_grid.size()},
                         {"real_shifts", hy.sampling.real_points + hy.sampling.random_shifts},
                         {"complex_shifts", hy.sampling.real_points * static_cast<int>(hy.sampling.imag_offsets.size()) +
                                                hy.sampling.random_shifts},
                         {"n_max", hy.n_max},
                         {"delta_min", hy.sampling.delta_min},
                         {"delta_max", hy.sampling.delta_max},
                         {"imag_offsets", hy.sampling.imag_offsets}};
  CommandResult out;
  out.exit_code = rep.verdict == "consistent" ? kExitOk : kExitViolation;
  out.summary = "verdict=" + rep.verdict;
  for (const auto& loc : rep.locations) out.summary += "\n" + loc;
  out.report = make_report("verify-hy", cfg, std::move(results));
  return out;
}

CommandResult cmd_renorm(const RunConfig& cfg) {
  const Generator G = cfg.generator();
  const AtomSpace& space = G.space();
  const RNVector x = config_vector(cfg, space, G.dim());
  const L0Scalar xn = l0_norm(x);
  const EtaNormOptions eo{cfg.renorm_n_max, cfg.stabilization_k};
  const double tol = cfg.tolerance;

  std::vector<L0Scalar> grid;
  for (const auto& e : cfg.eta_grid) grid.push_back(scalar_from_json(e, space));

  // M in the power estimate norm((eta R(eta))^n) <= M at tau = 0: the certified
  // envelope where it is global, the sampled power bound elsewhere.
  const GrowthEnvelope env = certify_envelope_at(G, L0Scalar::constant(space, 0.0));
  bool ok = true;
  bool tail = true;
  std::vector<std::string> violations;

  Json per_eta = Json::array();
  std::vector<L0Scalar> values;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto r = eta_norm(G, grid[k], x, eo);
    tail = tail && r.tail_flag;
    std::vector<double> M(space.size());
    Json source = Json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
      const bool cert = env.global[i];
      M[i] = cert ? env.M.re(i) : r.power_bound.re(i);
      source.push_back(cert ? "envelope" : "power_bound");
    }
    const L0Scalar Ml = L0Scalar::from_real(space, M);
    const L0Scalar lower = xn - r.value;
    const L0Scalar upper = r.value - Ml * xn;
    const bool kok = within(lower, xn, tol) && within(upper, Ml * xn, tol);
    if (!kok) violations.push_back("sandwich at eta index " + std::to_string(k));
    ok = ok && kok;
    Json e = to_json(r);
    e["eta"] = to_json(grid[k]);
    e["M"] = to_json(Ml);
    e["M_source"] = std::move(source);
    e["sandwich_lower_margin"] = margin_list(lower);
    e["sandwich_upper_margin"] = margin_list(upper);
    per_eta.push_back(std::move(e));
    values.push_back(r.value);
  }

  Json mono = Json::array();
  for (std::size_t k = 0; k + 1 < values.size(); ++k) {
    const L0Scalar m = values[k] - values[k + 1];
    const bool kok = !l0_leq(grid[k], grid[k + 1]) || within(m, values[k + 1], tol);
    if (!kok) violations.push_back("monotonicity between eta indices " + std::to_string(k) + " and " +
                                   std::to_string(k + 1));
    ok = ok && kok;
    mono.push_back({{"from", k}, {"to", k + 1}, {"margin", margin_list(m)}, {"ok", kok}});
  }

  const auto bar = bar_norm(G, x, grid, eo);
  if (!bar.collapse_ok) violations.push_back("grid-top collapse");
  ok = ok && bar.collapse_ok;

  Json contraction = Json::array();
  for (const auto& xj : cfg.contraction_xi) {
    const L0Scalar xi = scalar_from_json(xj, space);
    const auto c = contraction_check(G, xi, x, grid, eo, tol);
    tail = tail && c.tail_flag;
    if (!c.ok) violations.push_back("contraction at xi " + to_json(xi).dump());
    ok = ok && c.ok;
    contraction.push_back({{"xi", to_json(xi)},
                           {"lhs", to_json(c.lhs)},
                           {"rhs", to_json(c.rhs)},
                           {"margin", margin_list(c.margin)},
                           {"ok", c.ok}});
  }

  Json orbit;
  const AsuReport asu = is_asu_bounded(G);
  orbit["available"] = asu.all_bounded();
  if (asu.all_bounded()) {
    const auto tg = uniform_grid(cfg.t_max, static_cast<std::size_t>(cfg.t_points));
    const auto base = orbit_sup_norm(G, x, tg);
    orbit["value"] = to_json(base.value);
    orbit["upper"] = to_json(base.upper);
    orbit["sandwich_lower_margin"] = margin_list(xn - base.value);
    Json rows = Json::array();
    const std::size_t last = tg.size() - 1;
    for (std::size_t k : {last / 8, last / 4, last / 2}) {
      if (k == 0) continue;
      // T(t_k)x sampled on t_0..t_{last-k}, a subset of the orbit of x on the grid.
      const std::vector<double> sub(tg.begin(), tg.begin() + static_cast<std::ptrdiff_t>(last - k + 1));
      const auto moved = orbit_sup_norm(G, apply(evaluate(G, tg[k]), x), sub);
      const L0Scalar m = moved.value - base.value;
      const bool kok = within(m, base.value, tol);
      if (!kok) violations.push_back("orbit-norm contraction at t=" + fmt(tg[k]));
      ok = ok && kok;
      rows.push_back({{"t", tg[k]}, {"lhs", to_json(moved.value)}, {"margin", margin_list(m)}, {"ok", kok}});
    }
    orbit["contraction"] = std::move(rows);
  }

  Json results;
  results["x_norm"] = to_json(xn);
  results["envelope"] = to_json(env);
  results["truncation_n"] = cfg.renorm_n_max;
  results["stabilization_k"] = cfg.stabilization_k;
  results["per_eta"] = std::move(per_eta);
  results["monotonicity"] = std::move(mono);
  results["bar_norm"] = {{"value", to_json(bar.value)},
                         {"top_value", to_json(bar.top_value)},
                         {"collapse_gap", margin_list(bar.collapse_gap)},
                         {"collapse_ok", bar.collapse_ok}};
  results["contraction"] = std::move(contraction);
  results["orbit"] = std::move(orbit);
  results["tail_flag"] = tail;
  results["ok"] = ok;
  results["violations"] = violations;

  CommandResult out;
  out.exit_code = !ok ? kExitViolation : (!tail ? kExitAdvisory : kExitOk);
  out.summary = std::string("renorm ok=") + (ok ? "true" : "false") + " tail_flag=" + (tail ? "true" : "false");
  for (const auto& v : violations) out.summary += "\n" + v;
  out.report = make_report("renorm", cfg, std::move(results));
  return out;
}

CommandResult cmd_counterexample(const RunConfig& cfg) {
  using ce::Rational;
  const auto gap = ce::ftc_gap();
  Json results;
  const std::string line = "endpoint_difference=" + ce::to_string(gap.endpoint_difference) +
                           " integral=" + ce::to_string(gap.integral);
  results["gap"] = {{"endpoint_difference", ce::to_string(gap.endpoint_difference)},
                    {"integral", ce::to_string(gap.integral)},
                    {"gap", ce::to_string(gap.gap)},
                    {"line", line}};

  std::vector<std::array<Rational, 3>> triples = {
      {Rational(3, 10), Rational(2, 10), Rational(1)},
      {Rational(9, 10), Rational(1, 10), Rational(2)},
  };
  Rng rng(cfg.seed);
  for (int k = 0; k < cfg.random_triples; ++k) {
    const int a = rng.integer(0, 1000);
    int b = rng.integer(0, 999);
    if (b >= a) ++b;
    triples.push_back({Rational(a, 1000), Rational(b, 1000), Rational(rng.integer(1, 1000), 100)});
  }
  Json ex = Json::array();
  for (const auto& [t, t0, eps] : triples) {
    const Rational e = ce::diff_quotient_exceedance(t, t0, eps);
    const Rational len = ce::abs_value(Rational(t - t0));
    ex.push_back({{"t", ce::to_string(t)},
                  {"t0", ce::to_string(t0)},
                  {"eps", ce::to_string(eps)},
                  {"exceedance", ce::to_string(e)},
                  {"bound", ce::to_string(len)},
                  {"attains_bound", e == len}});
  }
  results["exceedance"] = std::move(ex);

  Json deriv = Json::array();
  for (const auto& [t0, eps, lambda] : std::vector<std::array<Rational, 3>>{
           {Rational(1, 2), Rational(1, 2), Rational(1, 10)},
           {Rational(1, 2), Rational(1000000), Rational(1, 100)},
           {Rational(0), Rational(1), Rational(1, 4)},
       }) {
    const auto w = ce::derivative_in_probability(t0, eps, lambda);
    deriv.push_back({{"t0", ce::to_string(t0)},
                     {"eps", ce::to_string(eps)},
                     {"lambda", ce::to_string(lambda)},
                     {"delta", ce::to_string(w.delta)},
                     {"derivative", ce::to_string(w.derivative)}});
  }
  results["derivative"] = std::move(deriv);

  const auto pairs = ce::dyadic_pairs(cfg.k_max);
  const auto rows = ce::lipschitz_failure_witness<Rational>(pairs);
  Json wit = Json::array();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    wit.push_back({{"k", k + 1},
                   {"t1", ce::to_string(rows[k].t1)},
                   {"t2", ce::to_string(rows[k].t2)},
                   {"modulus", ce::to_string(rows[k].modulus)},
                   {"measure", ce::to_string(rows[k].measure)}});
  }
  results["lipschitz_witness"] = std::move(wit);

  CommandResult out;
  out.exit_code = kExitOk;
  out.summary = line;
  out.report = make_report("counterexample", cfg, std::move(results));
  return out;
}

CommandResult cmd_plotdata(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  const Generator G = cfg.generator();
  const HYConfig hy = cfg.hy_config();
  const HYReport rep = full_report(G, hy);
  const std::size_t atoms = G.atoms();
  std::filesystem::create_directories(out_dir);
  CommandResult out;

  auto open = [&](const char* name) {
    const auto p = out_dir / name;
    std::ofstream f(p);
    if (!f) raise(ErrorCode::InvalidArgument, "cannot write '" + p.string() + "'");
    out.files.push_back(p);
    return f;
  };

  {
    auto f = open("norms.tsv");
    f << "t";
    for (std::size_t i = 0; i < atoms; ++i) f << "\tnorm_" << i;
    for (std::size_t i = 0; i < atoms; ++i) f << "\tbound_" << i;
    f << "\n";
    for (double t : hy.t_grid) {
      const auto n = op_norm(evaluate(G, t));
      f << fmt(t);
      for (std::size_t i = 0; i < atoms; ++i) f << "\t" << fmt(n.re(i));
      for (std::size_t i = 0; i < atoms; ++i) {
        f << "\t" << fmt(rep.envelope.M.re(i) * std::exp(rep.envelope.tau.re(i) * t));
      }
      f << "\n";
    }
  }
  {
    // xi = tau + 1 at every atom.
    const L0Scalar xi = rep.envelope.tau + L0Scalar::constant(G.space(), 1.0);
    const auto S = scalar_mul(xi - rep.envelope.tau, resolve_direct(G, xi).R);
    auto f = open("powers.tsv");
    f << "n";
    for (std::size_t i = 0; i < atoms; ++i) f << "\tpower_norm_" << i;
    f << "\n";
    ModuleHom P = ModuleHom::identity(G.space(), G.dim());
    for (int n = 1; n <= hy.n_max; ++n) {
      P = compose(S, P);
      const auto v = op_norm(P);
      f << n;
      for (std::size_t i = 0; i < atoms; ++i) f << "\t" << fmt(v.re(i));
      f << "\n";
    }
  }
  {
    auto f = open("margins.tsv");
    f << "condition\tsample\tatom\txi_re\txi_im\tmax_margin\n";
    for (const auto* c : {&rep.condition_b, &rep.condition_c}) {
      std::map<std::pair<std::size_t, std::size_t>, MarginEntry> worst;
      for (const auto& e : c->table) {
        auto [it, fresh] = worst.try_emplace({e.sample, e.atom}, e);
        if (!fresh && e.margin > it->second.margin) it->second = e;
      }
      for (const auto& [key, e] : worst) {
        f << c->name << "\t" << e.sample << "\t" << e.atom << "\t" << fmt(e.xi.real()) << "\t" << fmt(e.xi.imag())
          << "\t" << fmt(e.margin) << "\n";
      }
    }
  }
  Json results;
  Json files = Json::array();
  for (const auto& p : out.files) files.push_back(p.filename().string());
  results["files"] = std::move(files);
  results["verdict"] = rep.verdict;
  out.summary = "wrote " + std::to_string(out.files.size()) + " tables to " + out_dir.string();
  out.report = make_report("plotdata", cfg, std::move(results));
  return out;
}

RunConfig config_from_report(const std::filesystem::path& report) {
  std::ifstream in(report);
  if (!in) raise(ErrorCode::MissingReport, "cannot open report '" + report.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorCode::MissingReport, "report '" + report.string() + "' is not valid JSON");
  }
  if (!j.contains("body") || !j["body"].contains("config")) {
    raise(ErrorCode::MissingReport, "report '" + report.string() + "' carries no embedded config");
  }
  return parse_config(j["body"]["config"]);
}

}  // namespace rnsg
