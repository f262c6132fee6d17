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

#include <filesystem>
#include <string>
#include <vector>

#include "rnsg/config.hpp"

namespace rnsg {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitViolation = 2,
  kExitAdvisory = 3,
};

struct CommandResult {
  int exit_code = kExitOk;
  Json report;
  std::string summary;  // one line per headline result
  std::vector<std::filesystem::path> files;
};

/// {schema_version, header: {tool, version, generated_at}, body: {command, seed, config, results}}.
/// Only the header depends on the clock.
Json make_report(const std::string& command, const RunConfig& cfg, Json results);
/// The deterministic part of a report, as text.
std::string body_text(const Json& report);

CommandResult cmd_verify_hy(const RunConfig& cfg);
CommandResult cmd_renorm(const RunConfig& cfg);
CommandResult cmd_counterexample(const RunConfig& cfg);
/// Writes norms.tsv, powers.tsv and margins.tsv into `out_dir`.
CommandResult cmd_plotdata(const RunConfig& cfg, const std::filesystem::path& out_dir);

/// Recovers the embedded config of a previous report; throws MissingReport.
RunConfig config_from_report(const std::filesystem::path& report);

}  // namespace rnsg
