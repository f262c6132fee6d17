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

#include "rnsg/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rnsg/error.hpp"

namespace rnsg {

namespace {

[[noreturn]] void fail(const std::string& msg) { raise(ErrorCode::ConfigParseError, msg); }

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) fail(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) fail("unknown key '" + k + "' in " + where);
  }
}

template <class T>
T get(const Json& j, const char* key, T fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(std::string("bad value for '") + key + "': " + j[key].dump());
  }
}

std::vector<double> number_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : j) {
    if (!e.is_number()) fail(std::string(what) + " must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

EnvelopeStrategy parse_strategy(const std::string& s) {
  if (s == "certified") return EnvelopeStrategy::Certified;
  if (s == "spectral") return EnvelopeStrategy::Spectral;
  if (s == "fixed_tau") return EnvelopeStrategy::FixedTau;
  fail("unknown envelope strategy '" + s + "'");
}

std::string strategy_key(EnvelopeStrategy s) {
  switch (s) {
    case EnvelopeStrategy::Certified: return "certified";
    case EnvelopeStrategy::Spectral: return "spectral";
    case EnvelopeStrategy::FixedTau: return "fixed_tau";
  }
  return "certified";
}

}  // namespace

AtomSpace RunConfig::space() const { return AtomSpace::make(probs, normalize); }

Generator RunConfig::generator() const {
  const AtomSpace s = space();
  return Generator(ModuleHom(s, matrices), labels);
}

std::vector<double> RunConfig::t_grid() const {
  if (!t_explicit.empty()) return t_explicit;
  return uniform_grid(t_max, static_cast<std::size_t>(t_points));
}

HYConfig RunConfig::hy_config() const {
  const AtomSpace s = space();
  HYConfig h;
  h.t_grid = t_grid();
  h.sampling = sampling;
  h.sampling.seed = seed;
  h.n_max = n_max;
  h.check.tolerance = tolerance;
  h.envelope.strategy = strategy;
  if (M) h.M = scalar_from_json(*M, s);
  if (tau) h.tau = scalar_from_json(*tau, s);
  if (strategy == EnvelopeStrategy::FixedTau) {
    if (!h.tau) fail("strategy fixed_tau needs envelope.tau");
    h.envelope.tau = h.tau;
  }
  return h;
}

RunConfig parse_config(const Json& j) {
  check_keys(j, {"field", "seed", "tolerance", "space", "generator", "grids", "envelope", "renorm", "counterexample"},
             "config");
  RunConfig c;
  try {
    c.field = parse_field(get<std::string>(j, "field", "real"));
  } catch (const Error& e) {
    fail(e.what());
  }
  c.seed = get<std::uint64_t>(j, "seed", 0);
  c.tolerance = get<double>(j, "tolerance", 1e-9);
  if (!(c.tolerance > 0.0)) fail("tolerance must be positive");

  if (!j.contains("space")) fail("missing 'space'");
  const auto& sp = j["space"];
  check_keys(sp, {"probs", "normalize"}, "space");
  if (!sp.contains("probs")) fail("missing 'space.probs'");
  c.probs = number_list(sp["probs"], "space.probs");
  c.normalize = get<bool>(sp, "normalize", false);
  AtomSpace space;
  try {
    space = c.space();
  } catch (const Error& e) {
    fail(e.what());
  }

  if (!j.contains("generator")) fail("missing 'generator'");
  const auto& gen = j["generator"];
  check_keys(gen, {"matrices", "labels"}, "generator");
  if (!gen.contains("matrices") || !gen["matrices"].is_array()) fail("generator.matrices must be an array");
  if (gen["matrices"].size() != space.size()) {
    fail("generator.matrices has " + std::to_string(gen["matrices"].size()) + " entries for " +
         std::to_string(space.size()) + " atoms");
  }
  for (const auto& m : gen["matrices"]) c.matrices.push_back(matrix_from_json(m));
  for (const auto& m : c.matrices) {
    if (m.rows() != c.matrices.front().rows()) fail("all generator matrices must share one dimension");
    if (c.field == Field::Real && m.imag().cwiseAbs().maxCoeff() != 0.0) {
      fail("complex generator entries need field 'complex'");
    }
  }
  c.labels = get<std::vector<std::string>>(gen, "labels", {});

  if (j.contains("grids")) {
    const auto& g = j["grids"];
    check_keys(g,
               {"t_max", "t_points", "t", "delta_min", "delta_max", "real_points", "imag_offsets", "random_shifts",
                "n_max", "panels", "s_max"},
               "grids");
    c.t_max = get<double>(g, "t_max", c.t_max);
    c.t_points = get<int>(g, "t_points", c.t_points);
    if (g.contains("t")) c.t_explicit = number_list(g["t"], "grids.t");
    c.sampling.delta_min = get<double>(g, "delta_min", c.sampling.delta_min);
    c.sampling.delta_max = get<double>(g, "delta_max", c.sampling.delta_max);
    c.sampling.real_points = get<int>(g, "real_points", c.sampling.real_points);
    if (g.contains("imag_offsets")) c.sampling.imag_offsets = number_list(g["imag_offsets"], "grids.imag_offsets");
    c.sampling.random_shifts = get<int>(g, "random_shifts", c.sampling.random_shifts);
    c.n_max = get<int>(g, "n_max", c.n_max);
    if (g.contains("panels") && !g["panels"].is_null()) c.panels = get<int>(g, "panels", 0);
    if (g.contains("s_max") && !g["s_max"].is_null()) c.s_max = get<double>(g, "s_max", 0.0);
  }
  if (!(c.t_max > 0.0) || c.t_points < 2) fail("time grid needs t_max > 0 and t_points >= 2");
  for (double t : c.t_explicit) {
    if (!(t >= 0.0)) fail("grids.t entries must be nonnegative");
  }
  if (c.sampling.imag_offsets.empty()) fail("grids.imag_offsets must be nonempty");
  if (!(c.sampling.delta_min > 0.0) || c.sampling.delta_max < c.sampling.delta_min || c.sampling.real_points < 1) {
    fail("shift grid needs 0 < delta_min <= delta_max and real_points >= 1");
  }
  if (c.sampling.random_shifts < 0) fail("grids.random_shifts must be nonnegative");
  if (c.n_max < 1) fail("grids.n_max must be at least 1");
  if (c.panels && *c.panels < 1) fail("grids.panels must be positive");
  if (c.s_max && !(*c.s_max > 0.0)) fail("grids.s_max must be positive");

  if (j.contains("envelope")) {
    const auto& e = j["envelope"];
    check_keys(e, {"strategy", "M", "tau"}, "envelope");
    c.strategy = parse_strategy(get<std::string>(e, "strategy", "certified"));
    if (e.contains("M") && !e["M"].is_null()) c.M = e["M"];
    if (e.contains("tau") && !e["tau"].is_null()) c.tau = e["tau"];
    if (c.M && !c.tau) fail("envelope.M needs envelope.tau");
  }

  if (j.contains("renorm")) {
    const auto& r = j["renorm"];
    check_keys(r, {"eta_grid", "xi", "x", "n_max", "stabilization_k"}, "renorm");
    if (r.contains("eta_grid")) {
      if (!r["eta_grid"].is_array()) fail("renorm.eta_grid must be an array");
      for (const auto& e : r["eta_grid"]) c.eta_grid.push_back(e);
    }
    if (r.contains("xi")) {
      if (!r["xi"].is_array()) fail("renorm.xi must be an array");
      for (const auto& e : r["xi"]) c.contraction_xi.push_back(e);
    }
    if (r.contains("x") && !r["x"].is_null()) c.x = r["x"];
    c.renorm_n_max = get<int>(r, "n_max", c.renorm_n_max);
    c.stabilization_k = get<int>(r, "stabilization_k", c.stabilization_k);
  }
  if (c.eta_grid.empty()) c.eta_grid = {0.25, 0.5, 1.0, 2.0, 4.0};
  if (c.contraction_xi.empty()) c.contraction_xi = {0.5, 1.0, 4.0};
  if (c.renorm_n_max < 0 || c.stabilization_k < 1) fail("renorm needs n_max >= 0 and stabilization_k >= 1");

  if (j.contains("counterexample")) {
    const auto& ce = j["counterexample"];
    check_keys(ce, {"k_max", "random_triples"}, "counterexample");
    c.k_max = get<int>(ce, "k_max", c.k_max);
    c.random_triples = get<int>(ce, "random_triples", c.random_triples);
  }
  if (c.k_max < 1 || c.k_max > 60) fail("counterexample.k_max must lie in [1, 60]");
  if (c.random_triples < 0) fail("counterexample.random_triples must be nonnegative");

  // Scalars are resolved here so malformed ones fail at parse time.
  try {
    for (const auto& e : c.eta_grid) (void)scalar_from_json(e, space);
    for (const auto& e : c.contraction_xi) (void)scalar_from_json(e, space);
    if (c.M) (void)scalar_from_json(*c.M, space);
    if (c.tau) (void)scalar_from_json(*c.tau, space);
    if (c.x) (void)vector_from_json(*c.x, space);
  } catch (const Error& e) {
    fail(e.what());
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return parse_config(j);
}

Json resolved_json(const RunConfig& c) {
  Json j;
  j["field"] = std::string(field_name(c.field));
  j["seed"] = c.seed;
  j["tolerance"] = c.tolerance;
  j["space"] = {{"probs", c.probs}, {"normalize", c.normalize}};
  Json mats = Json::array();
  for (const auto& m : c.matrices) mats.push_back(to_json(m));
  j["generator"] = {{"matrices", mats}, {"labels", c.labels}};
  Json g;
  g["t_max"] = c.t_max;
  g["t_points"] = c.t_points;
  if (!c.t_explicit.empty()) g["t"] = c.t_explicit;
  g["delta_min"] = c.sampling.delta_min;
  g["delta_max"] = c.sampling.delta_max;
  g["real_points"] = c.sampling.real_points;
  g["imag_offsets"] = c.sampling.imag_offsets;
  g["random_shifts"] = c.sampling.random_shifts;
  g["n_max"] = c.n_max;
  g["panels"] = c.panels ? Json(*c.panels) : Json(nullptr);
  g["s_max"] = c.s_max ? Json(*c.s_max) : Json(nullptr);
  j["grids"] = std::move(g);
  Json e;
  e["strategy"] = strategy_key(c.strategy);
  e["M"] = c.M ? *c.M : Json(nullptr);
  e["tau"] = c.tau ? *c.tau : Json(nullptr);
  j["envelope"] = std::move(e);
  Json r;
  r["eta_grid"] = c.eta_grid;
  r["xi"] = c.contraction_xi;
  r["x"] = c.x ? *c.x : Json(nullptr);
  r["n_max"] = c.renorm_n_max;
  r["stabilization_k"] = c.stabilization_k;
  j["renorm"] = std::move(r);
  j["counterexample"] = {{"k_max", c.k_max}, {"random_triples", c.random_triples}};
  return j;
}

RunConfig default_config() {
  return parse_config(Json::parse(R"({"space": {"probs": [1.0]}, "generator": {"matrices": [[[0.0]]]}})"));
}

}  // namespace rnsg
