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

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

namespace rnsg {

using Complex = std::complex<double>;

/// Scalar field K of a run. The kernels always store complex numbers; the
/// field only restricts what inputs are accepted and how samples are drawn.
enum class Field { Real, Complex };

std::string_view field_name(Field f) noexcept;
Field parse_field(std::string_view name);

/// Finite probability space. Every atom carries strictly positive mass, so
/// "almost surely" means "at every atom".
class AtomSpace {
 public:
  AtomSpace() = default;

  /// Rejects empty input, non-positive masses, and (unless `normalize` is
  /// set) sums further than 1e-9 from one. The stored masses always sum to
  /// one within 1e-12.
  static AtomSpace make(std::vector<double> probs, bool normalize = false);
  static AtomSpace uniform(std::size_t atoms);

  [[nodiscard]] std::size_t size() const noexcept { return probs_ ? probs_->size() : 0; }
  [[nodiscard]] double prob(std::size_t i) const { return (*probs_)[i]; }
  [[nodiscard]] std::span<const double> probs() const noexcept {
    return probs_ ? std::span<const double>(*probs_) : std::span<const double>();
  }

  friend bool operator==(const AtomSpace& a, const AtomSpace& b) noexcept;

 private:
  explicit AtomSpace(std::shared_ptr<const std::vector<double>> probs) : probs_(std::move(probs)) {}
  std::shared_ptr<const std::vector<double>> probs_;
};

void require_same_space(const AtomSpace& a, const AtomSpace& b, std::string_view where);

/// An element of L0(F, K): one value per atom.
class L0Scalar {
 public:
  L0Scalar() = default;
  L0Scalar(AtomSpace space, std::vector<Complex> values);

  static L0Scalar constant(const AtomSpace& space, Complex c);
  static L0Scalar from_real(const AtomSpace& space, std::vector<double> values);

  [[nodiscard]] const AtomSpace& space() const noexcept { return space_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] Complex operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double re(std::size_t i) const { return values_[i].real(); }
  [[nodiscard]] std::span<const Complex> values() const noexcept { return values_; }

  [[nodiscard]] bool is_real() const noexcept;
  /// Real parts; throws ComplexValued when some imaginary part is nonzero.
  [[nodiscard]] std::vector<double> real_values() const;

  [[nodiscard]] L0Scalar map(const std::function<Complex(Complex)>& fn) const;
  [[nodiscard]] L0Scalar conj() const;
  [[nodiscard]] L0Scalar abs() const;
  [[nodiscard]] L0Scalar real_part() const;
  [[nodiscard]] L0Scalar exp() const;

  L0Scalar& operator+=(const L0Scalar& o);
  L0Scalar& operator-=(const L0Scalar& o);
  L0Scalar& operator*=(const L0Scalar& o);
  L0Scalar& operator/=(const L0Scalar& o);
  L0Scalar& operator*=(Complex c);

  friend L0Scalar operator+(L0Scalar a, const L0Scalar& b) { return a += b; }
  friend L0Scalar operator-(L0Scalar a, const L0Scalar& b) { return a -= b; }
  friend L0Scalar operator*(L0Scalar a, const L0Scalar& b) { return a *= b; }
  friend L0Scalar operator/(L0Scalar a, const L0Scalar& b) { return a /= b; }
  friend L0Scalar operator*(L0Scalar a, Complex c) { return a *= c; }
  friend L0Scalar operator*(Complex c, L0Scalar a) { return a *= c; }
  friend L0Scalar operator-(const L0Scalar& a) { return a * Complex(-1.0); }

 private:
  AtomSpace space_;
  std::vector<Complex> values_;
};

// Lattice operations of the pointwise order. All require real values.
L0Scalar l0_sup(std::span<const L0Scalar> family);
L0Scalar l0_inf(std::span<const L0Scalar> family);
L0Scalar l0_max(const L0Scalar& a, const L0Scalar& b);
L0Scalar l0_min(const L0Scalar& a, const L0Scalar& b);

bool l0_leq(const L0Scalar& a, const L0Scalar& b);
bool is_nonneg(const L0Scalar& a);
bool is_strictly_positive(const L0Scalar& a);

}  // namespace rnsg
