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

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "stegosec/bitstring.hpp"
#include "stegosec/container.hpp"
#include "stegosec/cost.hpp"
#include "stegosec/errors.hpp"

namespace stegosec {

// The explicit randomness consumed by one distinguisher call.
//
// A distinguisher declares a finite coin space; games hand it a tape value
// drawn uniformly from [0, coin_space) (Monte-Carlo) or run it once for every
// value (exhaustive). take() reads the tape as a mixed-radix number so
// composed distinguishers can split one tape between them.
struct CoinTape {
  std::uint64_t value = 0;

  std::uint64_t take(std::uint64_t bound) {
    const std::uint64_t draw = value % bound;
    value /= bound;
    return draw;
  }
};

// Decision procedure Input -> {0,1}. decide must be a pure function of
// (input, tape) and safe to call concurrently.
template <class Input>
class Distinguisher {
 public:
  using Decide = std::function<bool(const Input&, CoinTape)>;

  Distinguisher(std::string description, Cost time_budget,
                std::uint64_t coin_space, Decide decide)
      : description_(std::move(description)),
        time_budget_(time_budget),
        coin_space_(coin_space),
        decide_(std::move(decide)) {
    if (coin_space_ == 0) throw ConfigError("coin space must be nonempty");
    if (!decide_) throw ConfigError("distinguisher without a decision rule");
  }

  bool operator()(const Input& input, CoinTape tape = {}) const {
    return decide_(input, tape);
  }

  const std::string& description() const noexcept { return description_; }
  Cost time_budget() const noexcept { return time_budget_; }
  std::uint64_t coin_space() const noexcept { return coin_space_; }

 private:
  std::string description_;
  Cost time_budget_;
  std::uint64_t coin_space_;
  Decide decide_;
};

// Stegosystem-side attacker: sees a content.
using ContentDistinguisher = Distinguisher<Content>;
// Generator-side attacker: sees an N-bit string.
using StringDistinguisher = Distinguisher<NBitString>;

}  // namespace stegosec
