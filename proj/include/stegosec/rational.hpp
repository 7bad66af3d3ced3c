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

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace stegosec {

// Non-negative exact fraction, always stored in lowest terms. Probabilities in
// exhaustive games and total-variation distances are kept in this form so that
// equalities between independently enumerated quantities can be asserted
// exactly.
class Rational {
 public:
  constexpr Rational() = default;
  // Throws ConfigError on a zero denominator.
  Rational(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  double to_double() const noexcept;
  // Fixed-point rendering with exactly `digits` digits after the point,
  // rounded half-up on the exact value.
  std::string to_decimal(int digits = 12) const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  friend Rational abs_diff(const Rational& a, const Rational& b);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace stegosec
