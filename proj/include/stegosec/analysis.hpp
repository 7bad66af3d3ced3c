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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "stegosec/container.hpp"
#include "stegosec/distinguisher.hpp"
#include "stegosec/generator.hpp"

namespace stegosec {

struct ChiSquareResult {
  double statistic = 0.0;
  unsigned dof = 0;
  double p_value = 1.0;
};

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), evaluated by the
// power series of P for x < a + 1 and by a Lentz continued fraction for Q
// otherwise, both to relative tolerance 1e-15.
double regularized_gamma_q(double a, double x);

// Upper tail of the chi-square distribution: Q(dof / 2, statistic / 2).
double chi_square_p_value(double statistic, unsigned dof);

// Pearson statistic sum (obs - exp)^2 / exp with dof = size - 1.
// Throws ConfigError on mismatched or short inputs or a non-positive
// expected entry.
ChiSquareResult chi_square_statistic(std::span<const double> observed,
                                     std::span<const double> expected);

// Pairs-of-values analysis of a payload's byte histogram. For every value pair
// (2u, 2u+1) with a nonzero total the even count is compared against the pair
// mean; empty pairs are dropped. Fewer than two nonempty pairs is undecidable.
struct PairsOfValuesReport {
  bool undecidable = false;
  std::size_t nonempty_pairs = 0;
  ChiSquareResult chi_square;
};

PairsOfValuesReport pairs_of_values(const Content& content);

inline constexpr double kDefaultChiSquareThreshold = 0.95;

// Outputs 1 ("stego") iff the pairs-of-values p-value exceeds threshold_p.
// Undecidable contents get 0. Throws ConfigError unless 0 < threshold_p < 1.
ContentDistinguisher chi_square_lsb_distinguisher(
    double threshold_p = kDefaultChiSquareThreshold);

// Outputs 1 iff the content's plane equals m0 xor G(k) for some key k whose
// canonical value is below key_space_limit. Throws ConfigError when the limit
// exceeds 2^key_len or 2^16.
ContentDistinguisher replay_distinguisher(const NBitString& m0,
                                          GeneratorPtr weak_g,
                                          std::uint64_t key_space_limit,
                                          PositionMap pmap);

inline constexpr std::uint64_t kReplayMaxKeys = std::uint64_t{1} << 16;

template <class Input>
Distinguisher<Input> constant_distinguisher(bool b) {
  return Distinguisher<Input>(std::string("constant-") + (b ? "1" : "0"), 1, 1,
                              [b](const Input&, CoinTape) { return b; });
}

// Generator-side baseline: 1 iff the string is all zeros.
StringDistinguisher zero_string_distinguisher(std::size_t n_bits);

}  // namespace stegosec
