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

#include "rnsg/rn_module.hpp"

namespace rnsg {

/// exp(A) by scaling and squaring with a diagonal Pade approximant of degree
/// 3, 5, 7, 9 or 13. The degree and the number of squarings follow the
/// 1-norm thresholds of Higham (2005).
CMatrix expm(const CMatrix& A);

/// Degree and squaring count that expm would use for A; exposed for tests.
struct PadeChoice {
  int degree = 0;
  int squarings = 0;
};
PadeChoice pade_choice(const CMatrix& A);

}  // namespace rnsg
