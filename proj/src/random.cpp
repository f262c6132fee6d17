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

#include "rnsg/random.hpp"

#include <algorithm>

namespace rnsg {

namespace {

CMatrix gaussian(Rng& rng, Eigen::Index d, Field f) {
  CMatrix M(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) M(r, c) = rng.scalar(f);
  }
  return M;
}

double abscissa_of(const CMatrix& A) {
  Eigen::ComplexEigenSolver<CMatrix> es(A, false);
  return es.eigenvalues().real().maxCoeff();
}

CMatrix shifted_to(const CMatrix& A, double target) {
  return A + Complex(target - abscissa_of(A)) * CMatrix::Identity(A.rows(), A.cols());
}

}  // namespace

AtomSpace random_space(Rng& rng, std::size_t atoms) {
  std::vector<double> w(atoms);
  for (auto& v : w) v = rng.uniform(0.05, 1.0);
  return AtomSpace::make(std::move(w), true);
}

L0Scalar random_scalar(Rng& rng, const AtomSpace& space, Field f) {
  std::vector<Complex> v(space.size());
  for (auto& z : v) z = rng.scalar(f);
  return {space, std::move(v)};
}

L0Scalar random_uniform_scalar(Rng& rng, const AtomSpace& space, double lo, double hi) {
  std::vector<double> v(space.size());
  for (auto& z : v) z = rng.uniform(lo, hi);
  return L0Scalar::from_real(space, std::move(v));
}

RNVector random_vector(Rng& rng, const AtomSpace& space, Eigen::Index dim, Field f) {
  CMatrix data(static_cast<Eigen::Index>(space.size()), dim);
  for (Eigen::Index r = 0; r < data.rows(); ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) data(r, c) = rng.scalar(f);
  }
  return {space, std::move(data)};
}

ModuleHom random_hom(Rng& rng, const AtomSpace& space, Eigen::Index dim, Field f, double scale) {
  std::vector<CMatrix> mats;
  for (std::size_t i = 0; i < space.size(); ++i) mats.push_back(Complex(scale) * gaussian(rng, dim, f));
  return {space, std::move(mats)};
}

Generator random_stable_generator(Rng& rng, const AtomSpace& space, Eigen::Index dim, Field f, double margin) {
  std::vector<CMatrix> mats;
  for (std::size_t i = 0; i < space.size(); ++i) mats.push_back(shifted_to(gaussian(rng, dim, f), -margin));
  return Generator(ModuleHom(space, std::move(mats)));
}

Generator random_generator(Rng& rng, const AtomSpace& space, Eigen::Index dim, Field f, double lo, double hi) {
  std::vector<CMatrix> mats;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const CMatrix A = gaussian(rng, dim, f);
    mats.push_back(shifted_to(A, rng.uniform(lo, hi)));
  }
  return Generator(ModuleHom(space, std::move(mats)));
}

Generator random_normal_generator(Rng& rng, const AtomSpace& space, Eigen::Index dim, double re_lo, double re_hi) {
  std::vector<CMatrix> mats;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const CMatrix Q = gaussian(rng, dim, Field::Complex).householderQr().householderQ();
    CVector lam(dim);
    for (Eigen::Index k = 0; k < dim; ++k) lam(k) = Complex(rng.uniform(re_lo, re_hi), rng.uniform(-3.0, 3.0));
    mats.push_back(Q * lam.asDiagonal() * Q.adjoint());
  }
  return Generator(ModuleHom(space, std::move(mats)));
}

}  // namespace rnsg
