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

#include "rnsg/rn_module.hpp"

#include <string>

#include "rnsg/error.hpp"

namespace rnsg {

RNVector::RNVector(AtomSpace space, CMatrix data) : space_(std::move(space)), data_(std::move(data)) {
  if (static_cast<std::size_t>(data_.rows()) != space_.size()) {
    raise(ErrorCode::ShapeMismatch, "RNVector has " + std::to_string(data_.rows()) + " rows for " +
                                        std::to_string(space_.size()) + " atoms");
  }
}

RNVector RNVector::zero(const AtomSpace& space, Eigen::Index dim) {
  return RNVector(space, CMatrix::Zero(static_cast<Eigen::Index>(space.size()), dim));
}

RNVector RNVector::from_rows(const AtomSpace& space, const std::vector<std::vector<Complex>>& rows) {
  if (rows.size() != space.size()) raise(ErrorCode::ShapeMismatch, "row count differs from atom count");
  const auto d = static_cast<Eigen::Index>(rows.empty() ? 0 : rows.front().size());
  CMatrix data(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != d) raise(ErrorCode::ShapeMismatch, "ragged rows");
    for (Eigen::Index j = 0; j < d; ++j) data(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  return RNVector(space, std::move(data));
}

void require_same_shape(const RNVector& a, const RNVector& b, std::string_view where) {
  require_same_space(a.space(), b.space(), where);
  if (a.dim() != b.dim()) raise(ErrorCode::ShapeMismatch, std::string(where) + ": module ranks differ");
}

RNVector& RNVector::operator+=(const RNVector& o) {
  require_same_shape(*this, o, "RNVector +");
  data_ += o.data_;
  return *this;
}

RNVector& RNVector::operator-=(const RNVector& o) {
  require_same_shape(*this, o, "RNVector -");
  data_ -= o.data_;
  return *this;
}

RNVector operator*(const L0Scalar& xi, const RNVector& x) {
  require_same_space(xi.space(), x.space(), "module action");
  CMatrix out = x.data();
  for (Eigen::Index i = 0; i < out.rows(); ++i) out.row(i) *= xi[static_cast<std::size_t>(i)];
  return RNVector(x.space(), std::move(out));
}

L0Scalar l0_norm(const RNVector& x) {
  std::vector<double> n(static_cast<std::size_t>(x.atoms()));
  for (Eigen::Index i = 0; i < x.atoms(); ++i) n[static_cast<std::size_t>(i)] = x.data().row(i).norm();
  return L0Scalar::from_real(x.space(), std::move(n));
}

double exceedance_probability(const RNVector& x, double eps) {
  if (!(eps > 0.0)) raise(ErrorCode::NonpositiveEpsilon, "eps must be positive");
  const auto norms = l0_norm(x);
  double p = 0.0;
  for (std::size_t i = 0; i < norms.size(); ++i) {
    if (norms.re(i) >= eps) p += x.space().prob(i);
  }
  return p;
}

bool in_neighbourhood(const RNVector& x, double eps, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) raise(ErrorCode::InvalidArgument, "lambda must lie in (0, 1)");
  return exceedance_probability(x, eps) < lambda;
}

ConvergenceReport converges_in_probability(std::span<const RNVector> terms, const RNVector& limit, double tolerance) {
  if (terms.empty()) raise(ErrorCode::EmptyFamily, "converges_in_probability needs at least one term");
  ConvergenceReport rep;
  rep.tolerance = tolerance;
  rep.trajectory.reserve(terms.size());
  for (const auto& x : terms) {
    require_same_shape(x, limit, "converges_in_probability");
    rep.trajectory.push_back(l0_norm(x - limit));
  }
  rep.deviation = rep.trajectory.back();
  rep.exceedance = exceedance_probability(terms.back() - limit, tolerance);
  rep.converges = rep.exceedance == 0.0;
  return rep;
}

}  // namespace rnsg
