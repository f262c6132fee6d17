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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rnsg/serialize.hpp"

namespace rnsg {

/// Parsed run configuration. Every field has a default except the space and
/// the generator; see docs/schema.md for the file format.
struct RunConfig {
  Field field = Field::Real;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;

  std::vector<double> probs;
  bool normalize = false;
  std::vector<CMatrix> matrices;
  std::vector<std::string> labels;

  // grids
  double t_max = 10.0;
  int t_points = 201;
  std::vector<double> t_explicit;  // replaces the uniform grid when nonempty
  ShiftSampling sampling;
  int n_max = 32;
  std::optional<int> panels;
  std::optional<double> s_max;

  // envelope
  EnvelopeStrategy strategy = EnvelopeStrategy::Certified;
  std::optional<Json> M;
  std::optional<Json> tau;

  // renorm
  std::vector<Json> eta_grid;
  std::vector<Json> contraction_xi;
  std::optional<Json> x;
  int renorm_n_max = 64;
  int stabilization_k = 8;

  // counterexample
  int k_max = 20;
  int random_triples = 16;

  [[nodiscard]] AtomSpace space() const;
  [[nodiscard]] Generator generator() const;
  [[nodiscard]] std::vector<double> t_grid() const;
  [[nodiscard]] HYConfig hy_config() const;
};

RunConfig parse_config(const Json& j);
RunConfig load_config(const std::filesystem::path& path);
/// Same fields with every default filled in; parse_config round-trips it.
Json resolved_json(const RunConfig& c);

/// Minimal configuration used when a command runs without --config.
RunConfig default_config();

}  // namespace rnsg
