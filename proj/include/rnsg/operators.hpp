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

#include <vector>

#include "rnsg/rn_module.hpp"

namespace rnsg {

/// Continuous module homomorphism of L0(F, K)^d: one d x d matrix per atom.
class ModuleHom {
 public:
  ModuleHom() = default;
  ModuleHom(AtomSpace space, std::vector<CMatrix> mats);

  static ModuleHom identity(const AtomSpace& space, Eigen::Index dim);
  static ModuleHom zero(const AtomSpace& space, Eigen::Index dim);
  /// Multiplication by an L0 scalar, xi * I.
  static ModuleHom scalar(const L0Scalar& xi, Eigen::Index dim);

  [[nodiscard]] const AtomSpace& space() const noexcept { return space_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t atoms() const noexcept { return mats_.size(); }
  [[nodiscard]] const CMatrix& at(std::size_t atom) const { return mats_[atom]; }
  [[nodiscard]] const std::vector<CMatrix>& mats() const noexcept { return mats_; }
  [[nodiscard]] bool is_real() const;

  friend bool operator==(const ModuleHom& a, const ModuleHom& b);

 private:
  AtomSpace space_;
  Eigen::Index dim_ = 0;
  std::vector<CMatrix> mats_;
};

void require_same_shape(const ModuleHom& a, const ModuleHom& b, std::string_view where);

RNVector apply(const ModuleHom& T, const RNVector& x);

/// Largest singular value per atom, which is the supremum of norm(Tx) over
/// norm(x) <= 1 for the Euclidean row norm.
L0Scalar op_norm(const ModuleHom& T);

/// Per-atom right singular vector for the largest singular value.
RNVector top_singular_vector(const ModuleHom& T);

ModuleHom compose(const ModuleHom& T, const ModuleHom& U);  // T after U
ModuleHom scalar_mul(const L0Scalar& xi, const ModuleHom& T);
ModuleHom add(const ModuleHom& T, const ModuleHom& U);
ModuleHom subtract(const ModuleHom& T, const ModuleHom& U);
ModuleHom power(const ModuleHom& T, unsigned n);

}  // namespace rnsg
