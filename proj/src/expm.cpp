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

#include "rnsg/expm.hpp"

#include <Eigen/LU>
#include <array>
#include <cmath>

namespace rnsg {

namespace {

constexpr std::array<double, 4> kB3{120.0, 60.0, 12.0, 1.0};
constexpr std::array<double, 6> kB5{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
constexpr std::array<double, 8> kB7{17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0};
constexpr std::array<double, 10> kB9{17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0,
                                     2162160.0,     110880.0,     3960.0,       90.0,        1.0};
constexpr std::array<double, 14> kB13{64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                      1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                      670442572800.0,      33522128640.0,       1323241920.0,
                                      40840800.0,          960960.0,            16380.0,
                                      182.0,               1.0};

constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

double one_norm(const CMatrix& A) { return A.cwiseAbs().colwise().sum().maxCoeff(); }

template <std::size_t N>
CMatrix pade_low(const CMatrix& A, const std::array<double, N>& b) {
  const auto n = A.rows();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix A2 = A * A;
  CMatrix power = I;
  CMatrix u = CMatrix::Zero(n, n);
  CMatrix v = CMatrix::Zero(n, n);
  for (std::size_t j = 0; j + 1 < N; j += 2) {
    v += b[j] * power;
    u += b[j + 1] * power;
    power = power * A2;
  }
  u = A * u;
  return (v - u).partialPivLu().solve(v + u);
}

CMatrix pade13(const CMatrix& A) {
  const auto& b = kB13;
  const auto n = A.rows();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix A2 = A * A;
  const CMatrix A4 = A2 * A2;
  const CMatrix A6 = A4 * A2;
  const CMatrix u = A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
  const CMatrix v = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

PadeChoice pade_choice(const CMatrix& A) {
  const double nrm = one_norm(A);
  if (nrm <= kTheta3) return {3, 0};
  if (nrm <= kTheta5) return {5, 0};
  if (nrm <= kTheta7) return {7, 0};
  if (nrm <= kTheta9) return {9, 0};
  const int s = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / kTheta13))));
  return {13, s};
}

CMatrix expm(const CMatrix& A) {
  const auto n = A.rows();
  if (n == 0) return A;
  if (A.isZero(0.0)) return CMatrix::Identity(n, n);
  const PadeChoice choice = pade_choice(A);
  switch (choice.degree) {
    case 3: return pade_low(A, kB3);
    case 5: return pade_low(A, kB5);
    case 7: return pade_low(A, kB7);
    case 9: return pade_low(A, kB9);
    default: break;
  }
  CMatrix r = pade13(A / std::ldexp(1.0, choice.squarings));
  for (int k = 0; k < choice.squarings; ++k) r = r * r;
  return r;
}

}  // namespace rnsg
