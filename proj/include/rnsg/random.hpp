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
#include <random>

#include "rnsg/semigroup.hpp"

namespace rnsg {

/// Seeded generator for reproducible instances. Uniform draws use the raw
/// 53-bit mantissa construction so they do not depend on the standard
/// library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double normal() { return normal_(engine_); }
  Complex scalar(Field f) { return f == Field::Real ? Complex(normal(), 0.0) : Complex(normal(), normal()); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

AtomSpace random_space(Rng& rng, std::size_t atoms);
L0Scalar random_scalar(Rng& rng, const AtomSpace& space, Field f);
/// Real scalar with every value in [lo, hi].
L0Scalar random_uniform_scalar(Rng& rng, const AtomSpace& space, double lo, double hi);
RNVector random_vector(Rng& rng, const AtomSpace& space, Eigen::Index dim, Field f);
/// Gaussian entries scaled by `scale`.
ModuleHom random_hom(Rng& rng, const AtomSpace& space, Eigen::Index dim, Field f, double scale = 1.0);
/// Random matrices shifted so the spectral abscissa is exactly -margin at every atom.
Generator random_stable_generator(Rng& rng, const AtomSpace& space, Eigen::Index dim, Field f, double margin);
/// Generators with random spectral abscissa in [lo, hi] per atom.
Generator random_generator(Rng& rng, const AtomSpace& space, Eigen::Index dim, Field f, double lo, double hi);
/// U D U* with a random unitary U and eigenvalues with real part in [re_lo, re_hi].
Generator random_normal_generator(Rng& rng, const AtomSpace& space, Eigen::Index dim, double re_lo, double re_hi);

}  // namespace rnsg
