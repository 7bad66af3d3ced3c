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

#include "stegosec/reference.hpp"

#include <vector>

#include "game_common.hpp"
#include "stegosec/seeding.hpp"

namespace stegosec::reference {

using detail::kRealArm;
using detail::kUniformArm;

AdvantageReport generator_game(const StringDistinguisher& d,
                               const Generator& g, const GameConfig& config) {
  detail::check_generator_game(d, g, config);
  AdvantageReport report;
  report.arena = Arena::generator;
  report.mode = config.mode;
  report.master_seed = config.master_seed;
  const std::uint64_t coins = d.coin_space();

  if (config.mode == GameMode::exhaustive) {
    report.samples_a = report.hits_a = 0;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << g.key_len()); ++k) {
      const NBitString pad = g.expand(detail::key_from_index(g.key_len(), k));
      for (std::uint64_t c = 0; c < coins; ++c) {
        report.hits_a += d(pad, CoinTape{c});
        ++report.samples_a;
      }
    }
    report.samples_b = report.hits_b = 0;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << g.out_len()); ++y) {
      const NBitString s = NBitString::from_value(g.out_len(), y);
      for (std::uint64_t c = 0; c < coins; ++c) {
        report.hits_b += d(s, CoinTape{c});
        ++report.samples_b;
      }
    }
    return report;
  }

  report.samples_a = report.samples_b = config.trials;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    TrialStream rng(config.master_seed, kRealArm, t);
    const NBitString key = rng.bits(g.key_len());
    const CoinTape tape{rng.below(coins)};
    report.hits_a += d(g.expand(key), tape);
  }
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    TrialStream rng(config.master_seed, kUniformArm, t);
    const NBitString y = rng.bits(g.out_len());
    report.hits_b += d(y, CoinTape{rng.below(coins)});
  }
  return report;
}

AdvantageReport stego_game(const ContentDistinguisher& d,
                           const Stegosystem& sys, const NBitString& message,
                           const GameConfig& config) {
  detail::check_stego_game(d, sys, message, config);
  const SupportFamily& family = sys.family();
  const std::uint64_t coins = d.coin_space();
  const std::uint64_t r = family.size();
  const std::size_t n = sys.n_bits();

  AdvantageReport report;
  report.arena = Arena::stego;
  report.mode = config.mode;
  report.master_seed = config.master_seed;

  if (config.mode == GameMode::exhaustive) {
    report.samples_a = report.hits_a = 0;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << sys.key_len()); ++k) {
      const NBitString key = detail::key_from_index(sys.key_len(), k);
      for (std::uint64_t i = 0; i < r; ++i) {
        const Content stego = sys.embed(i, message, key);
        for (std::uint64_t c = 0; c < coins; ++c) {
          report.hits_a += d(stego, CoinTape{c});
          ++report.samples_a;
        }
      }
    }
    report.samples_b = report.hits_b = 0;
    for (std::uint64_t i = 0; i < r; ++i) {
      for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
        const Content x = family.member(i, NBitString::from_value(n, j));
        for (std::uint64_t c = 0; c < coins; ++c) {
          report.hits_b += d(x, CoinTape{c});
          ++report.samples_b;
        }
      }
    }
    return report;
  }

  report.samples_a = report.samples_b = config.trials;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    TrialStream rng(config.master_seed, kRealArm, t);
    const NBitString key = rng.bits(sys.key_len());
    const std::uint64_t i = rng.below(r);
    const CoinTape tape{rng.below(coins)};
    report.hits_a += d(sys.embed(i, message, key), tape);
  }
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    TrialStream rng(config.master_seed, kUniformArm, t);
    const std::uint64_t i = rng.below(r);
    const NBitString j = rng.bits(n);
    const CoinTape tape{rng.below(coins)};
    report.hits_b += d(family.member(i, j), tape);
  }
  return report;
}

StegoSecurityReport verify_stego_security(const Stegosystem& sys) {
  detail::check_verify(sys);
  const SupportFamily& family = sys.family();
  const std::size_t n = sys.n_bits();
  const std::uint64_t r = family.size();
  const std::uint64_t messages = std::uint64_t{1} << n;

  std::vector<std::vector<std::uint64_t>> counts(
      messages, std::vector<std::uint64_t>(r << n, 0));
  for (std::uint64_t m = 0; m < messages; ++m) {
    const NBitString message = NBitString::from_value(n, m);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << sys.key_len()); ++k) {
      const NBitString key = detail::key_from_index(sys.key_len(), k);
      for (std::uint64_t i = 0; i < r; ++i) {
        const SupportIndex at = family.index_of(sys.embed(i, message, key));
        ++counts[m][(at.base << n) + at.plane.value()];
      }
    }
  }
  return detail::summarize_security(sys, std::move(counts));
}

}  // namespace stegosec::reference
