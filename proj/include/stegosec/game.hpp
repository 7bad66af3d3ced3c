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
#include <vector>

#include "stegosec/distinguisher.hpp"
#include "stegosec/rational.hpp"
#include "stegosec/report.hpp"
#include "stegosec/stegosystem.hpp"

namespace stegosec {

// Exhaustive stego-side enumeration bound on N and key_len.
inline constexpr std::size_t kStegoGameMaxBits = 10;

// Distinguishing game on a stegosystem for a fixed message m.
//
// Arm A: k uniform over keys, i uniform over bases, d(embed(i, m, k)).
// Arm B: x uniform over the r * 2^N family members, drawn as uniform (i, j).
// Every draw also includes a uniform coin tape for d.
AdvantageReport stego_game(const ContentDistinguisher& d,
                           const Stegosystem& sys, const NBitString& message,
                           const GameConfig& config);

// Distribution over family members (i, j), stored as counts over a common
// denominator. Cell (i, j) lives at index i * 2^N + j.
struct EmpiricalDistribution {
  std::size_t bases = 0;
  std::size_t plane_bits = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  Rational probability(std::size_t i, std::uint64_t j) const;

  friend bool operator==(const EmpiricalDistribution&,
                         const EmpiricalDistribution&) = default;
};

struct StegoSecurityReport {
  // Uniform distribution over the family.
  EmpiricalDistribution cover;
  // Distribution of index_of(embed(i, m, k)) for the worst message.
  EmpiricalDistribution worst_stego;
  std::uint64_t worst_message = 0;
  // Total-variation distance to the cover distribution, one per message value.
  std::vector<Rational> tv_by_message;
  Rational max_tv;
  // D(cover || stego) in bits for the worst message; infinite when the stego
  // distribution misses some member.
  bool relative_entropy_infinite = false;
  double relative_entropy_bits = 0.0;

  friend bool operator==(const StegoSecurityReport&,
                         const StegoSecurityReport&) = default;
};

// Enumerates every message, key and base and compares the induced member
// distribution with the uniform one. Throws ConfigError when N or key_len
// exceed kStegoGameMaxBits or the enumeration exceeds kVerifyMaxWork steps.
StegoSecurityReport verify_stego_security(const Stegosystem& sys,
                                          int workers = 0);

inline constexpr std::uint64_t kVerifyMaxWork = std::uint64_t{1} << 34;

// Turns a stego-side distinguisher into a generator-side one: on input y the
// wrapper takes i from its tape, builds member (i, m0 xor y) and returns
// inner's decision on the rest of the tape. Declared cost is
// inner + T1 + N + 1.
StringDistinguisher reduce(const ContentDistinguisher& inner,
                           const SupportFamily& family, const NBitString& m0);

// Declared cost of reduce(inner, family, m0).
Cost reduction_cost(Cost inner_budget, Cost t1, std::size_t n_bits);

}  // namespace stegosec
