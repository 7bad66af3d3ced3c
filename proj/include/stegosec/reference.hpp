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

// Single-threaded reference versions of the game kernels. They call embed,
// index_of and expand directly for every sample, without scratch buffers or
// precomputed pad tables, and are kept to cross-check the OpenMP kernels and as
// the baseline in the benchmarks.

#include "stegosec/game.hpp"
#include "stegosec/generator.hpp"

namespace stegosec::reference {

AdvantageReport generator_game(const StringDistinguisher& d,
                               const Generator& g, const GameConfig& config);

AdvantageReport stego_game(const ContentDistinguisher& d,
                           const Stegosystem& sys, const NBitString& message,
                           const GameConfig& config);

StegoSecurityReport verify_stego_security(const Stegosystem& sys);

}  // namespace stegosec::reference
