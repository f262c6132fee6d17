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

#include <string>

#include "json.hpp"
#include "rnsg/counterexample.hpp"
#include "rnsg/hille_yosida.hpp"
#include "rnsg/renorm.hpp"

namespace rnsg {

/// Insertion-ordered so dumps are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Finite doubles as numbers; infinities and NaN as the strings "inf", "-inf", "nan".
Json number_json(double v);
/// Real values as numbers, complex values as [re, im] pairs.
Json complex_json(Complex z);

Json to_json(const AtomSpace& s);
Json to_json(const L0Scalar& x);
Json to_json(const RNVector& x);
Json to_json(const CMatrix& m);
Json to_json(const std::vector<bool>& flags);
Json to_json(const GrowthEnvelope& e);
Json to_json(const MarginEntry& e);
Json to_json(const ConditionReport& r);  // omits the full table
Json to_json(const HYReport& r);
Json to_json(const EtaNormResult& r);

/// Number, or [re, im].
Complex complex_from_json(const Json& j);
/// Number (constant) or array with one entry (number or [re, im]) per atom.
L0Scalar scalar_from_json(const Json& j, const AtomSpace& space);
CMatrix matrix_from_json(const Json& j);
/// Array of rows, one per atom; a single row is broadcast.
RNVector vector_from_json(const Json& j, const AtomSpace& space);

std::string dump(const Json& j);

}  // namespace rnsg
