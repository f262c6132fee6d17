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

// rnsg: command-line driver for the verification suites.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rnsg/commands.hpp"
#include "rnsg/error.hpp"

namespace {

struct Common {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::optional<std::string> field;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "Run configuration (JSON)");
  sub->add_option("--out", c.out, "Output path (report file, or directory for plotdata)");
  sub->add_option("--seed", c.seed, "Random seed, overrides the config");
  sub->add_option("--tolerance", c.tolerance, "Relative tolerance, overrides the config")
      ->check(CLI::PositiveNumber);
  sub->add_option("--field", c.field, "Scalar field")->check(CLI::IsMember({"real", "complex"}));
}

rnsg::RunConfig resolve(const Common& c, bool config_required) {
  if (c.config.empty() && config_required) {
    rnsg::raise(rnsg::ErrorCode::ConfigParseError, "--config is required");
  }
  auto cfg = c.config.empty() ? rnsg::default_config() : rnsg::load_config(c.config);
  if (c.seed) cfg.seed = *c.seed;
  if (c.tolerance) cfg.tolerance = *c.tolerance;
  if (c.field) {
    cfg.field = rnsg::parse_field(*c.field);
    // Re-validate so a real field still rejects complex entries.
    cfg = rnsg::parse_config(rnsg::resolved_json(cfg));
  }
  return cfg;
}

void emit(const rnsg::CommandResult& r, const std::string& out) {
  const std::string text = rnsg::dump(r.report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) rnsg::raise(rnsg::ErrorCode::InvalidArgument, "cannot write '" + out + "'");
    f << text;
  }
  std::cerr << r.summary << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random normed module semigroup verification toolkit"};
  app.require_subcommand(1);

  Common hy, rn, cx, pd;
  auto* verify = app.add_subcommand("verify-hy", "Check the Hille-Yosida conditions for a generator stack");
  add_common(verify, hy);
  auto* renorm = app.add_subcommand("renorm", "Equivalent-norm sandwich, monotonicity and contraction checks");
  add_common(renorm, rn);
  auto* counter = app.add_subcommand("counterexample", "Exact interval-indicator counterexample tables");
  add_common(counter, cx);
  auto* plot = app.add_subcommand("plotdata", "Write TSV tables for external plotting");
  add_common(plot, pd);
  std::string report_path;
  plot->add_option("--report", report_path, "Previous report whose embedded config is reused");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : rnsg::kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const auto r = rnsg::cmd_verify_hy(resolve(hy, true));
      emit(r, hy.out);
      return r.exit_code;
    }
    if (renorm->parsed()) {
      const auto r = rnsg::cmd_renorm(resolve(rn, true));
      emit(r, rn.out);
      return r.exit_code;
    }
    if (counter->parsed()) {
      const auto r = rnsg::cmd_counterexample(resolve(cx, false));
      std::cout << r.summary << "\n";
      if (!cx.out.empty()) {
        std::ofstream f(cx.out);
        if (!f) rnsg::raise(rnsg::ErrorCode::InvalidArgument, "cannot write '" + cx.out + "'");
        f << rnsg::dump(r.report);
      } else {
        std::cout << rnsg::dump(r.report);
      }
      return r.exit_code;
    }
    if (plot->parsed()) {
      rnsg::RunConfig cfg;
      if (!report_path.empty()) {
        cfg = rnsg::config_from_report(report_path);
        if (pd.seed) cfg.seed = *pd.seed;
      } else {
        if (pd.config.empty()) rnsg::raise(rnsg::ErrorCode::MissingReport, "plotdata needs --report or --config");
        cfg = resolve(pd, true);
      }
      const auto r = rnsg::cmd_plotdata(cfg, std::filesystem::path(pd.out.empty() ? "plotdata" : pd.out));
      std::cerr << r.summary << "\n";
      return r.exit_code;
    }
  } catch (const rnsg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rnsg::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return rnsg::kExitUsage;
  }
  return rnsg::kExitUsage;
}
