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

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "rnsg/l0.hpp"

namespace rnsg {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Element of the free RN module L0(F, K)^d: row i is the K^d value at atom i.
class RNVector {
 public:
  RNVector() = default;
  RNVector(AtomSpace space, CMatrix data);

  static RNVector zero(const AtomSpace& space, Eigen::Index dim);
  static RNVector from_rows(const AtomSpace& space, const std::vector<std::vector<Complex>>& rows);

  [[nodiscard]] const AtomSpace& space() const noexcept { return space_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return data_.cols(); }
  [[nodiscard]] Eigen::Index atoms() const noexcept { return data_.rows(); }
  [[nodiscard]] const CMatrix& data() const noexcept { return data_; }
  [[nodiscard]] CVector row(Eigen::Index atom) const { return data_.row(atom).transpose(); }
  void set_row(Eigen::Index atom, const CVector& v) { data_.row(atom) = v.transpose(); }

  RNVector& operator+=(const RNVector& o);
  RNVector& operator-=(const RNVector& o);
  RNVector& operator*=(Complex c) {
    data_ *= c;
    return *this;
  }

  friend RNVector operator+(RNVector a, const RNVector& b) { return a += b; }
  friend RNVector operator-(RNVector a, const RNVector& b) { return a -= b; }
  friend RNVector operator*(RNVector a, Complex c) { return a *= c; }
  friend RNVector operator*(Complex c, RNVector a) { return a *= c; }

 private:
  AtomSpace space_;
  CMatrix data_;
};

/// Module action: row i scaled by xi at atom i.
RNVector operator*(const L0Scalar& xi, const RNVector& x);

void require_same_shape(const RNVector& a, const RNVector& b, std::string_view where);

/// Pointwise Euclidean norm of each atom's row.
L0Scalar l0_norm(const RNVector& x);

/// P{ norm(x) >= eps }. The boundary value counts as an exceedance.
double exceedance_probability(const RNVector& x, double eps);

/// Membership in the basic neighbourhood N(eps, lambda) of the null vector,
/// i.e. P{ norm(x) < eps } > 1 - lambda.
bool in_neighbourhood(const RNVector& x, double eps, double lambda);

struct ConvergenceReport {
  bool converges = false;
  L0Scalar deviation;               // norm(x_last - limit) per atom
  std::vector<L0Scalar> trajectory;  // norm(x_k - limit) for every supplied term
  double exceedance = 0.0;          // P{ deviation >= tolerance }
  double tolerance = 0.0;
};

/// On a finite atom space convergence in probability is convergence of the
/// norm at every atom; the verdict is read off the last sampled term.
ConvergenceReport converges_in_probability(std::span<const RNVector> terms, const RNVector& limit, double tolerance);

}  // namespace rnsg
