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

#include "rnsg/error.hpp"

namespace rnsg {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::NonpositiveProbability: return "NonpositiveProbability";
    case ErrorCode::UnnormalizedProbabilities: return "UnnormalizedProbabilities";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::ComplexValued: return "ComplexValued";
    case ErrorCode::NonpositiveEpsilon: return "NonpositiveEpsilon";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::SingularShift: return "SingularShift";
    case ErrorCode::NonconvergentIntegral: return "NonconvergentIntegral";
    case ErrorCode::NotStrictlyPositive: return "NotStrictlyPositive";
    case ErrorCode::NotAsuBounded: return "NotAsuBounded";
    case ErrorCode::ShiftNotAdmissible: return "ShiftNotAdmissible";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::DegenerateQuotient: return "DegenerateQuotient";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigParseError: return "ConfigParseError";
    case ErrorCode::MissingReport: return "MissingReport";
  }
  return "Unknown";
}

}  // namespace rnsg
