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
#include <memory>
#include <string_view>

#include "stegosec/bitstring.hpp"
#include "stegosec/cost.hpp"
#include "stegosec/distinguisher.hpp"
#include "stegosec/report.hpp"

namespace stegosec {

enum class GeneratorKind {
  // Identity on l = N bits.
  one_time_pad,
  // ChaCha20 keystream keyed by a BLAKE2b digest of the key bits.
  counter_stream,
  // Always 0^N. Negative control.
  constant_zero,
  // 16-bit linear congruential generator. Negative control.
  short_cycle,
};

std::string_view to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(std::string_view name);

// Deterministic key expander {0,1}^key_len -> {0,1}^out_len.
class Generator {
 public:
  virtual ~Generator() = default;

  GeneratorKind kind() const noexcept { return kind_; }
  std::size_t key_len() const noexcept { return key_len_; }
  std::size_t out_len() const noexcept { return out_len_; }
  // Declared abstract cost of one expansion.
  Cost time_budget() const noexcept { return time_budget_; }

  // Throws StructuralError when |key| != key_len.
  NBitString expand(const NBitString& key) const;
  // Same as expand, writing into `out` (resized to out_len).
  void expand_into(const NBitString& key, NBitString& out) const;

 protected:
  Generator(GeneratorKind kind, std::size_t key_len, std::size_t out_len,
            Cost time_budget)
      : kind_(kind),
        key_len_(key_len),
        out_len_(out_len),
        time_budget_(time_budget) {}

  // `out` is zeroed and has out_len bits.
  virtual void do_expand(const NBitString& key, NBitString& out) const = 0;

 private:
  GeneratorKind kind_;
  std::size_t key_len_;
  std::size_t out_len_;
  Cost time_budget_;
};

using GeneratorPtr = std::shared_ptr<const Generator>;

// Throws ConfigError on invalid lengths: one_time_pad needs key_len == out_len,
// short_cycle needs key_len <= 16.
GeneratorPtr make_generator(GeneratorKind kind, std::size_t key_len,
                            std::size_t out_len);

// Short-cycle recurrence parameters: state' = (a * state + c) mod 2^16,
// seeded with the key value; output bit t is bit 15 of the (t+1)-th state.
inline constexpr std::uint32_t kShortCycleMultiplier = 25173;
inline constexpr std::uint32_t kShortCycleIncrement = 13849;

// Distinguishing game on a generator: arm A feeds d with G(k) for uniform k,
// arm B with a uniform N-bit string.
//
// Exhaustive mode (key_len, out_len <= 12) enumerates every key, string and
// coin tape and returns exact frequencies. Monte-Carlo mode draws
// config.trials samples per arm from streams derived from master_seed, so the
// report is identical for any worker count. Throws ConfigError on zero trials
// or exhaustive mode beyond the bounds.
AdvantageReport generator_game(const StringDistinguisher& d,
                               const Generator& g, const GameConfig& config);

inline constexpr std::size_t kGeneratorGameMaxBits = 12;

}  // namespace stegosec
