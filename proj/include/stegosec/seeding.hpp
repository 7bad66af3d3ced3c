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

#include "stegosec/bitstring.hpp"

namespace stegosec {

// Per-trial randomness for Monte-Carlo games.
//
// Every trial owns an independent SplitMix64 stream whose starting state is a
// pure function of (master_seed, arm, trial):
//
//   arm_key = mix64(master_seed ^ ((arm + 1) * 0x9e3779b97f4a7c15))
//   state   = mix64(arm_key + trial * 0xd1b54a32d192ed03)
//
// where mix64 is the SplitMix64 finalizer. Trials therefore produce the same
// draws whichever worker evaluates them and in whatever order.
std::uint64_t mix64(std::uint64_t x) noexcept;

class TrialStream {
 public:
  TrialStream(std::uint64_t master_seed, std::uint64_t arm,
              std::uint64_t trial) noexcept;

  std::uint64_t next() noexcept;

  // Uniform on [0, bound) by rejection; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) noexcept;

  // Uniform n-bit string; successive 64-bit draws fill successive words.
  NBitString bits(std::size_t n);
  void fill_bits(NBitString& out) noexcept;

 private:
  std::uint64_t state_;
};

}  // namespace stegosec
