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

#include "rnsg/serialize.hpp"

#include <cmath>

#include "rnsg/error.hpp"

namespace rnsg {

Json number_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

Json complex_json(Complex z) {
  if (z.imag() == 0.0) return number_json(z.real());
  return Json::array({number_json(z.real()), number_json(z.imag())});
}

Json to_json(const AtomSpace& s) {
  Json j = Json::array();
  for (double p : s.probs()) j.push_back(p);
  return j;
}

Json to_json(const L0Scalar& x) {
  Json j = Json::array();
  for (const auto& z : x.values()) j.push_back(complex_json(z));
  return j;
}

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RNVector& x) { return to_json(x.data()); }

Json to_json(const std::vector<bool>& flags) {
  Json j = Json::array();
  for (bool b : flags) j.push_back(b);
  return j;
}

Json to_json(const GrowthEnvelope& e) {
  Json j;
  j["strategy"] = std::string(strategy_name(e.strategy));
  j["M"] = to_json(e.M);
  j["tau"] = to_json(e.tau);
  j["global"] = to_json(e.global);
  Json h = Json::array();
  for (double v : e.horizon) h.push_back(number_json(v));
  j["horizon"] = std::move(h);
  j["note"] = e.note;
  return j;
}

Json to_json(const MarginEntry& e) {
  Json j;
  j["atom"] = e.atom;
  j["sample"] = e.sample;
  j["n"] = e.n;
  j["t"] = number_json(e.t);
  j["xi"] = complex_json(e.xi);
  j["value"] = number_json(e.value);
  j["bound"] = number_json(e.bound);
  j["margin"] = number_json(e.margin);
  j["in_resolvent_set"] = e.in_resolvent_set;
  return j;
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["condition"] = r.name;
  j["passed"] = r.passed();
  j["pass"] = to_json(r.pass);
  Json tol = Json::array();
  for (double t : r.tolerance) tol.push_back(number_json(t));
  j["tolerance"] = std::move(tol);
  j["evaluations"] = r.table.size();
  j["worst_relative_margin"] = number_json(r.worst_relative_margin());
  Json worst = Json::array();
  for (const auto& e : r.worst) worst.push_back(to_json(e));
  j["worst"] = std::move(worst);
  j["violation_count"] = r.violation_count;
  Json v = Json::array();
  for (const auto& e : r.violations) v.push_back(to_json(e));
  j["violations"] = std::move(v);
  return j;
}

Json to_json(const HYReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["consistent"] = r.consistent;
  j["directional_ok"] = r.directional_ok;
  j["envelope"] = to_json(r.envelope);
  j["condition_a"] = to_json(r.condition_a);
  j["condition_b"] = to_json(r.condition_b);
  j["condition_c"] = to_json(r.condition_c);
  j["locations"] = r.locations;
  return j;
}

Json to_json(const EtaNormResult& r) {
  Json j;
  j["value"] = to_json(r.value);
  j["power_bound"] = to_json(r.power_bound);
  j["argmax"] = r.argmax;
  j["stabilized"] = to_json(r.stabilized);
  j["tail_flag"] = r.tail_flag;
  return j;
}

namespace {

double real_from_json(const Json& j, const char* what) {
  if (!j.is_number()) raise(ErrorCode::ConfigParseError, std::string(what) + " must be a number");
  return j.get<double>();
}

}  // namespace

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {real_from_json(j[0], "real part"), real_from_json(j[1], "imaginary part")};
  raise(ErrorCode::ConfigParseError, "expected a number or a [re, im] pair, got " + j.dump());
}

L0Scalar scalar_from_json(const Json& j, const AtomSpace& space) {
  if (j.is_number()) return L0Scalar::constant(space, complex_from_json(j));
  if (!j.is_array()) raise(ErrorCode::ConfigParseError, "expected a scalar or per-atom array, got " + j.dump());
  if (j.size() != space.size()) {
    raise(ErrorCode::ConfigParseError, "per-atom array has " + std::to_string(j.size()) + " entries for " +
                                            std::to_string(space.size()) + " atoms");
  }
  std::vector<Complex> v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return {space, std::move(v)};
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) raise(ErrorCode::ConfigParseError, "matrix must be a nonempty array of rows");
  const auto d = static_cast<Eigen::Index>(j.size());
  CMatrix M(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
      raise(ErrorCode::ConfigParseError, "matrix must be square");
    }
    for (Eigen::Index c = 0; c < d; ++c) M(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return M;
}

RNVector vector_from_json(const Json& j, const AtomSpace& space) {
  if (!j.is_array() || j.empty()) raise(ErrorCode::ConfigParseError, "vector must be a nonempty array");
  // A single row is broadcast to every atom.
  if (j.size() != 1 && j.size() != space.size()) raise(ErrorCode::ConfigParseError, "vector needs one row per atom");
  std::vector<std::vector<Complex>> rows;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& r = j[j.size() == 1 ? 0 : i];
    if (!r.is_array() || r.empty()) raise(ErrorCode::ConfigParseError, "vector rows must be nonempty arrays");
    std::vector<Complex> row;
    for (const auto& e : r) row.push_back(complex_from_json(e));
    rows.push_back(std::move(row));
  }
  return RNVector::from_rows(space, rows);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rnsg
