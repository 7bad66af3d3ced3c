//
// Copyright 2026 The stegosec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "stegosec/rational.hpp"

#include <numeric>

#include "stegosec/errors.hpp"

namespace stegosec {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational reduce(u128 num, u128 den) {
  const u128 g = gcd128(num, den);
  num /= g;
  den /= g;
  if (den > UINT64_MAX || num > UINT64_MAX) {
    throw ConfigError("rational overflows 64-bit numerator or denominator");
  }
  return Rational(static_cast<std::uint64_t>(num),
                  static_cast<std::uint64_t>(den));
}

}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ConfigError("rational with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double Rational::to_double() const noexcept {
  return static_cast<double>(static_cast<long double>(num_) /
                             static_cast<long double>(den_));
}

std::string Rational::to_decimal(int digits) const {
  std::string out = std::to_string(num_ / den_);
  if (digits <= 0) return out;
  u128 scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  u128 frac = (u128{num_ % den_} * scale * 2 + den_) / (u128{den_} * 2);
  if (frac == scale) {
    out = std::to_string(num_ / den_ + 1);
    frac = 0;
  }
  std::string tail(static_cast<std::size_t>(digits), '0');
  for (int d = digits - 1; d >= 0; --d) {
    tail[static_cast<std::size_t>(d)] = static_cast<char>('0' + frac % 10);
    frac /= 10;
  }
  return out + "." + tail;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return u128{a.num_} * b.den_ <=> u128{b.num_} * a.den_;
}

Rational abs_diff(const Rational& a, const Rational& b) {
  const u128 lhs = u128{a.num_} * b.den_;
  const u128 rhs = u128{b.num_} * a.den_;
  return reduce(lhs > rhs ? lhs - rhs : rhs - lhs, u128{a.den_} * b.den_);
}

}  // namespace stegosec
