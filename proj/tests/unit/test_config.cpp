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

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "rnsg/commands.hpp"
#include "rnsg/error.hpp"

using namespace rnsg;

namespace {

Json base() {
  return Json::parse(R"({
    "space": {"probs": [0.5, 0.5]},
    "generator": {"matrices": [[[0, 1], [0, 0]], [[-1, 0], [0, -2]]]},
    "grids": {"t_max": 4, "t_points": 21, "n_max": 8}
  })");
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an rnsg::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("config parsing and defaults") {
  const auto c = parse_config(base());
  CHECK(c.field == Field::Real);
  CHECK(c.matrices.size() == 2);
  CHECK(c.t_grid().size() == 21);
  CHECK(c.eta_grid.size() == 5);
  CHECK(c.strategy == EnvelopeStrategy::Certified);
  // Round trip through the resolved form.
  const auto again = parse_config(resolved_json(c));
  CHECK(dump(resolved_json(again)) == dump(resolved_json(c)));
}

TEST_CASE("config errors") {
  auto j = base();
  j["space"]["probs"] = {0.5, 0.6};
  CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigParseError);
  j = base();
  j["space"]["probs"] = Json::array();
  CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigParseError);
  j = base();
  j["bogus"] = 1;
  CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigParseError);
  j = base();
  j["generator"]["matrices"][0][0][0] = {0.0, 1.0};
  CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigParseError);
  j["field"] = "complex";
  CHECK(parse_config(j).matrices[0](0, 0) == Complex(0, 1));
  j = base();
  j["grids"]["n_max"] = 0;
  CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigParseError);
  j = base();
  j["envelope"] = {{"M", 1}};
  CHECK(code_of([&] { parse_config(j); }) == ErrorCode::ConfigParseError);
  CHECK(code_of([] { load_config("/nonexistent/config.json"); }) == ErrorCode::ConfigParseError);
}

TEST_CASE("scalar and vector json") {
  const auto s = AtomSpace::uniform(2);
  CHECK(scalar_from_json(Json(2.0), s).re(1) == 2.0);
  const auto v = scalar_from_json(Json::parse("[1, [0, 2]]"), s);
  CHECK(v[1] == Complex(0, 2));
  CHECK_THROWS_AS(scalar_from_json(Json::parse("[1, 2, 3]"), s), Error);
  const auto x = vector_from_json(Json::parse("[[1, 2]]"), s);
  CHECK(x.data()(1, 1) == Complex(2, 0));
  CHECK(number_json(1.0 / 0.0) == "inf");
}

TEST_CASE("verify-hy exit codes") {
  auto c = parse_config(base());
  CHECK(cmd_verify_hy(c).exit_code == kExitOk);
  auto j = base();
  j["envelope"] = {{"M", 1}, {"tau", 0}};
  const auto r = cmd_verify_hy(parse_config(j));
  CHECK(r.exit_code == kExitViolation);
  CHECK(r.summary.find("condition (a) atom 0") != std::string::npos);
  CHECK(r.report["schema_version"] == kSchemaVersion);
  CHECK(r.report["body"]["config"]["seed"] == 0);
}

TEST_CASE("reports are deterministic") {
  auto c = parse_config(base());
  c.seed = 99;
  CHECK(body_text(cmd_verify_hy(c).report) == body_text(cmd_verify_hy(c).report));
  CHECK(body_text(cmd_counterexample(c).report) == body_text(cmd_counterexample(c).report));
}

TEST_CASE("renorm command") {
  auto j = base();
  j["generator"]["matrices"] = Json::parse("[[[0, 0], [0, 0]], [[-1, 0], [0, -1]]]");
  j["renorm"] = {{"x", Json::parse("[[3, 4]]")}};
  const auto r = cmd_renorm(parse_config(j));
  CHECK(r.exit_code == kExitOk);
  const auto& res = r.report["body"]["results"];
  CHECK(res["bar_norm"]["value"][0].get<double>() == doctest::Approx(5.0));
  CHECK(res["bar_norm"]["value"][1].get<double>() == doctest::Approx(5.0));
  CHECK(res["tail_flag"] == true);

  // Transient growth inside a short window leaves the sup unstabilized: advisory only.
  j["generator"]["matrices"] = Json::parse("[[[-1, 10], [0, -1]], [[-1, 0], [0, -1]]]");
  j["renorm"]["n_max"] = 4;
  j["renorm"]["stabilization_k"] = 4;
  const auto adv = cmd_renorm(parse_config(j));
  CHECK(adv.report["body"]["results"]["tail_flag"] == false);
  CHECK(adv.exit_code == kExitAdvisory);
}

TEST_CASE("counterexample command") {
  const auto r = cmd_counterexample(default_config());
  CHECK(r.summary == "endpoint_difference=-1 integral=0");
  const auto& res = r.report["body"]["results"];
  CHECK(res["exceedance"][1]["exceedance"] == "0");
  CHECK(res["lipschitz_witness"][9]["modulus"] == "1024");
  CHECK(res["lipschitz_witness"][9]["measure"] == "1/1024");
}

TEST_CASE("plotdata tables") {
  const auto dir = std::filesystem::temp_directory_path() / "rnsg_plotdata_test";
  std::filesystem::remove_all(dir);
  auto j = base();
  j["generator"]["matrices"] = Json::parse("[[[-1]], [[0]]]");
  const auto r = cmd_plotdata(parse_config(j), dir);
  CHECK(r.files.size() == 3);
  std::ifstream f(dir / "norms.tsv");
  std::string header;
  std::getline(f, header);
  CHECK(header.rfind("t\tnorm_0\tnorm_1", 0) == 0);
  double t = 0;
  double n0 = 0;
  double n1 = 0;
  while (f >> t >> n0 >> n1) {
    std::string rest;
    std::getline(f, rest);
    CHECK(std::abs(n0 - std::exp(-t)) <= 1e-12);
    CHECK(n1 == 1.0);
  }
  std::filesystem::remove_all(dir);
  CHECK(code_of([] { config_from_report("/nonexistent/report.json"); }) == ErrorCode::MissingReport);
}
