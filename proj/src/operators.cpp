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

#include "rnsg/operators.hpp"

#include <Eigen/SVD>
#include <string>

#include "rnsg/error.hpp"

namespace rnsg {

ModuleHom::ModuleHom(AtomSpace space, std::vector<CMatrix> mats) : space_(std::move(space)), mats_(std::move(mats)) {
  if (mats_.size() != space_.size()) {
    raise(ErrorCode::ShapeMismatch, "matrix stack has " + std::to_string(mats_.size()) + " entries for " +
                                        std::to_string(space_.size()) + " atoms");
  }
  dim_ = mats_.empty() ? 0 : mats_.front().rows();
  for (const auto& m : mats_) {
    if (m.rows() != dim_ || m.cols() != dim_) raise(ErrorCode::ShapeMismatch, "stack entries must be square of equal size");
  }
}

ModuleHom ModuleHom::identity(const AtomSpace& space, Eigen::Index dim) {
  return ModuleHom(space, std::vector<CMatrix>(space.size(), CMatrix::Identity(dim, dim)));
}

ModuleHom ModuleHom::zero(const AtomSpace& space, Eigen::Index dim) {
  return ModuleHom(space, std::vector<CMatrix>(space.size(), CMatrix::Zero(dim, dim)));
}

ModuleHom ModuleHom::scalar(const L0Scalar& xi, Eigen::Index dim) {
  std::vector<CMatrix> mats;
  mats.reserve(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) mats.emplace_back(xi[i] * CMatrix::Identity(dim, dim));
  return ModuleHom(xi.space(), std::move(mats));
}

bool ModuleHom::is_real() const {
  for (const auto& m : mats_) {
    if (m.imag().cwiseAbs().maxCoeff() != 0.0) return false;
  }
  return true;
}

bool operator==(const ModuleHom& a, const ModuleHom& b) {
  if (!(a.space_ == b.space_) || a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.mats_.size(); ++i) {
    if (a.mats_[i] != b.mats_[i]) return false;
  }
  return true;
}

void require_same_shape(const ModuleHom& a, const ModuleHom& b, std::string_view where) {
  require_same_space(a.space(), b.space(), where);
  if (a.dim() != b.dim()) raise(ErrorCode::ShapeMismatch, std::string(where) + ": operator sizes differ");
}

RNVector apply(const ModuleHom& T, const RNVector& x) {
  require_same_space(T.space(), x.space(), "apply");
  if (T.dim() != x.dim()) raise(ErrorCode::ShapeMismatch, "apply: operator and vector ranks differ");
  CMatrix out(x.atoms(), x.dim());
  for (Eigen::Index i = 0; i < x.atoms(); ++i) {
    out.row(i) = (T.at(static_cast<std::size_t>(i)) * x.data().row(i).transpose()).transpose();
  }
  return RNVector(x.space(), std::move(out));
}

L0Scalar op_norm(const ModuleHom& T) {
  std::vector<double> s(T.atoms(), 0.0);
  for (std::size_t i = 0; i < T.atoms(); ++i) {
    if (T.dim() == 0) continue;
    Eigen::JacobiSVD<CMatrix> svd(T.at(i));
    s[i] = svd.singularValues()(0);
  }
  return L0Scalar::from_real(T.space(), std::move(s));
}

RNVector top_singular_vector(const ModuleHom& T) {
  CMatrix out(static_cast<Eigen::Index>(T.atoms()), T.dim());
  for (std::size_t i = 0; i < T.atoms(); ++i) {
    Eigen::JacobiSVD<CMatrix> svd(T.at(i), Eigen::ComputeFullV);
    out.row(static_cast<Eigen::Index>(i)) = svd.matrixV().col(0).transpose();
  }
  return RNVector(T.space(), std::move(out));
}

ModuleHom compose(const ModuleHom& T, const ModuleHom& U) {
  require_same_shape(T, U, "compose");
  std::vector<CMatrix> mats(T.atoms());
  for (std::size_t i = 0; i < T.atoms(); ++i) mats[i] = T.at(i) * U.at(i);
  return ModuleHom(T.space(), std::move(mats));
}

ModuleHom scalar_mul(const L0Scalar& xi, const ModuleHom& T) {
  require_same_space(xi.space(), T.space(), "scalar_mul");
  std::vector<CMatrix> mats(T.atoms());
  for (std::size_t i = 0; i < T.atoms(); ++i) mats[i] = xi[i] * T.at(i);
  return ModuleHom(T.space(), std::move(mats));
}

ModuleHom add(const ModuleHom& T, const ModuleHom& U) {
  require_same_shape(T, U, "add");
  std::vector<CMatrix> mats(T.atoms());
  for (std::size_t i = 0; i < T.atoms(); ++i) mats[i] = T.at(i) + U.at(i);
  return ModuleHom(T.space(), std::move(mats));
}

ModuleHom subtract(const ModuleHom& T, const ModuleHom& U) {
  require_same_shape(T, U, "subtract");
  std::vector<CMatrix> mats(T.atoms());
  for (std::size_t i = 0; i < T.atoms(); ++i) mats[i] = T.at(i) - U.at(i);
  return ModuleHom(T.space(), std::move(mats));
}

ModuleHom power(const ModuleHom& T, unsigned n) {
  ModuleHom out = ModuleHom::identity(T.space(), T.dim());
  for (unsigned k = 0; k < n; ++k) out = compose(T, out);
  return out;
}

}  // namespace rnsg
