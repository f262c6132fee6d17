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

#include "rnsg/l0.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "rnsg/error.hpp"

namespace rnsg {

std::string_view field_name(Field f) noexcept { return f == Field::Real ? "real" : "complex"; }

Field parse_field(std::string_view name) {
  if (name == "real") return Field::Real;
  if (name == "complex") return Field::Complex;
  raise(ErrorCode::InvalidArgument, "field must be 'real' or 'complex', got '" + std::string(name) + "'");
}

AtomSpace AtomSpace::make(std::vector<double> probs, bool normalize) {
  if (probs.empty()) raise(ErrorCode::EmptySpace, "probability list is empty");
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] > 0.0) || !std::isfinite(probs[i])) {
      std::ostringstream os;
      os << "atom " << i << " has probability " << probs[i];
      raise(ErrorCode::NonpositiveProbability, os.str());
    }
  }
  double sum = 0.0;
  for (double p : probs) sum += p;
  if (!normalize && std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream os;
    os.precision(17);
    os << "probabilities sum to " << sum;
    raise(ErrorCode::UnnormalizedProbabilities, os.str());
  }
  for (double& p : probs) p /= sum;
  return AtomSpace(std::make_shared<const std::vector<double>>(std::move(probs)));
}

AtomSpace AtomSpace::uniform(std::size_t atoms) {
  return make(std::vector<double>(atoms, 1.0 / static_cast<double>(atoms == 0 ? 1 : atoms)), true);
}

bool operator==(const AtomSpace& a, const AtomSpace& b) noexcept {
  if (a.probs_ == b.probs_) return true;
  if (!a.probs_ || !b.probs_) return false;
  return *a.probs_ == *b.probs_;
}

void require_same_space(const AtomSpace& a, const AtomSpace& b, std::string_view where) {
  if (!(a == b)) raise(ErrorCode::SpaceMismatch, std::string(where) + ": operands live on different atom spaces");
}

L0Scalar::L0Scalar(AtomSpace space, std::vector<Complex> values) : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    raise(ErrorCode::ShapeMismatch, "L0Scalar has " + std::to_string(values_.size()) + " values for " +
                                        std::to_string(space_.size()) + " atoms");
  }
}

L0Scalar L0Scalar::constant(const AtomSpace& space, Complex c) {
  return L0Scalar(space, std::vector<Complex>(space.size(), c));
}

L0Scalar L0Scalar::from_real(const AtomSpace& space, std::vector<double> values) {
  std::vector<Complex> v(values.begin(), values.end());
  return L0Scalar(space, std::move(v));
}

bool L0Scalar::is_real() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Complex z) { return z.imag() == 0.0; });
}

std::vector<double> L0Scalar::real_values() const {
  if (!is_real()) raise(ErrorCode::ComplexValued, "expected a real-valued L0 scalar");
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](Complex z) { return z.real(); });
  return out;
}

L0Scalar L0Scalar::map(const std::function<Complex(Complex)>& fn) const {
  std::vector<Complex> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), fn);
  return L0Scalar(space_, std::move(out));
}

L0Scalar L0Scalar::conj() const { return map([](Complex z) { return std::conj(z); }); }
L0Scalar L0Scalar::abs() const { return map([](Complex z) { return Complex(std::abs(z)); }); }
L0Scalar L0Scalar::real_part() const { return map([](Complex z) { return Complex(z.real()); }); }
L0Scalar L0Scalar::exp() const {
  return map([](Complex z) { return z.imag() == 0.0 ? Complex(std::exp(z.real())) : std::exp(z); });
}

namespace {

template <class Op>
void combine(std::vector<Complex>& lhs, const AtomSpace& ls, const L0Scalar& rhs, Op op, std::string_view where) {
  require_same_space(ls, rhs.space(), where);
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] = op(lhs[i], rhs[i]);
}

}  // namespace

L0Scalar& L0Scalar::operator+=(const L0Scalar& o) {
  combine(values_, space_, o, std::plus<>(), "L0Scalar +");
  return *this;
}
L0Scalar& L0Scalar::operator-=(const L0Scalar& o) {
  combine(values_, space_, o, std::minus<>(), "L0Scalar -");
  return *this;
}
L0Scalar& L0Scalar::operator*=(const L0Scalar& o) {
  combine(values_, space_, o, std::multiplies<>(), "L0Scalar *");
  return *this;
}
L0Scalar& L0Scalar::operator/=(const L0Scalar& o) {
  combine(values_, space_, o, std::divides<>(), "L0Scalar /");
  return *this;
}
L0Scalar& L0Scalar::operator*=(Complex c) {
  for (auto& v : values_) v *= c;
  return *this;
}

namespace {

template <class Pick>
L0Scalar reduce_family(std::span<const L0Scalar> family, Pick pick, std::string_view where) {
  if (family.empty()) raise(ErrorCode::EmptyFamily, std::string(where) + " of an empty family");
  std::vector<double> acc = family.front().real_values();
  for (std::size_t k = 1; k < family.size(); ++k) {
    require_same_space(family.front().space(), family[k].space(), where);
    const auto v = family[k].real_values();
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = pick(acc[i], v[i]);
  }
  return L0Scalar::from_real(family.front().space(), std::move(acc));
}

}  // namespace

L0Scalar l0_sup(std::span<const L0Scalar> family) {
  return reduce_family(family, [](double a, double b) { return std::max(a, b); }, "l0_sup");
}

L0Scalar l0_inf(std::span<const L0Scalar> family) {
  return reduce_family(family, [](double a, double b) { return std::min(a, b); }, "l0_inf");
}

L0Scalar l0_max(const L0Scalar& a, const L0Scalar& b) {
  const L0Scalar pair[] = {a, b};
  return l0_sup(pair);
}

L0Scalar l0_min(const L0Scalar& a, const L0Scalar& b) {
  const L0Scalar pair[] = {a, b};
  return l0_inf(pair);
}

bool l0_leq(const L0Scalar& a, const L0Scalar& b) {
  require_same_space(a.space(), b.space(), "l0_leq");
  const auto av = a.real_values();
  const auto bv = b.real_values();
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (!(av[i] <= bv[i])) return false;
  }
  return true;
}

bool is_nonneg(const L0Scalar& a) {
  const auto v = a.real_values();
  return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0.0; });
}

bool is_strictly_positive(const L0Scalar& a) {
  const auto v = a.real_values();
  return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
}

}  // namespace rnsg
