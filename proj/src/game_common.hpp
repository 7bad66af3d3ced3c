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

// Pieces shared by the OpenMP kernels and the serial reference: argument
// validation, the sampling order of Monte-Carlo trials, and turning per-message
// member counts into a stego-security report.

#include <cstdint>
#include <vector>

#include "stegosec/game.hpp"
#include "stegosec/generator.hpp"

namespace stegosec::detail {

// Monte-Carlo trial streams: arm 0 is the real arm, arm 1 the uniform one.
inline constexpr std::uint64_t kRealArm = 0;
inline constexpr std::uint64_t kUniformArm = 1;

inline constexpr std::uint64_t kMaxExhaustiveSamples = std::uint64_t{1} << 40;

void check_monte_carlo(const GameConfig& config);

// Key whose canonical value is k.
NBitString key_from_index(std::size_t key_len, std::uint64_t k);

void check_generator_game(const StringDistinguisher& d, const Generator& g,
                          const GameConfig& config);
void check_stego_game(const ContentDistinguisher& d, const Stegosystem& sys,
                      const NBitString& message, const GameConfig& config);
void check_verify(const Stegosystem& sys);

// Exhaustive sample counts per arm; throws ConfigError past
// kMaxExhaustiveSamples.
std::uint64_t checked_product(std::initializer_list<std::uint64_t> factors);

// counts[m] holds r * 2^N member counts for message m, each over r * 2^key_len
// embeddings.
StegoSecurityReport summarize_security(
    const Stegosystem& sys, std::vector<std::vector<std::uint64_t>> counts);

}  // namespace stegosec::detail
