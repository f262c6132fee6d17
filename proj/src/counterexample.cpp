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

#include "rnsg/counterexample.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace rnsg::counterexample {

std::vector<std::pair<Rational, Rational>> dyadic_pairs(int k_max) {
  if (k_max < 1 || k_max > 60) raise(ErrorCode::InvalidArgument, "k_max must lie in [1, 60]");
  std::vector<std::pair<Rational, Rational>> out;
  const Rational half(1, 2);
  for (int k = 1; k <= k_max; ++k) out.emplace_back(half, half + Rational(1, std::int64_t{1} << k));
  return out;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    raise(ErrorCode::InvalidArgument, "not a rational number: '" + std::string(whole) + "'");
  }
  return v;
}

std::int64_t pow10(int e, std::string_view whole) {
  if (e < 0 || e > 18) raise(ErrorCode::InvalidArgument, "exponent out of range in '" + std::string(whole) + "'");
  std::int64_t p = 1;
  for (int k = 0; k < e; ++k) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), whole);
    const auto den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) raise(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }
  int exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<int>(parse_int(text.substr(e + 1), whole));
    text = text.substr(0, e);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  int frac_digits = 0;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
    frac_digits = static_cast<int>(text.size() - dot - 1);
  } else {
    digits = std::string(text);
  }
  if (digits.empty()) raise(ErrorCode::InvalidArgument, "not a rational number: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      raise(ErrorCode::InvalidArgument, "not a rational number: '" + std::string(whole) + "'");
    }
  }
  const std::int64_t mant = parse_int(digits, whole);
  const int scale = exponent - frac_digits;
  Rational r = scale >= 0 ? Rational(mant * pow10(scale, whole)) : Rational(mant, pow10(-scale, whole));
  return negative ? -r : r;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace rnsg::counterexample
