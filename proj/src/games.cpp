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

// OpenMP kernels for the distinguishing games and the stego-security check.
// Serial counterparts live in reference.cpp.

#include <string>
#include <vector>

#include "game_common.hpp"
#include "parallel.hpp"
#include "stegosec/errors.hpp"
#include "stegosec/game.hpp"
#include "stegosec/generator.hpp"
#include "stegosec/seeding.hpp"

namespace stegosec {

using detail::kRealArm;
using detail::kUniformArm;

namespace {

std::vector<NBitString> pad_table(const Generator& g) {
  std::vector<NBitString> pads(std::uint64_t{1} << g.key_len());
  for (std::uint64_t k = 0; k < pads.size(); ++k) {
    pads[k] = g.expand(detail::key_from_index(g.key_len(), k));
  }
  return pads;
}

// Per-thread buffers for stego-side kernels.
struct StegoScratch {
  Content content;
  NBitString plane;
  NBitString key;
  NBitString pad;
};

}  // namespace

AdvantageReport generator_game(const StringDistinguisher& d,
                               const Generator& g, const GameConfig& config) {
  detail::check_generator_game(d, g, config);
  AdvantageReport report;
  report.arena = Arena::generator;
  report.mode = config.mode;
  report.master_seed = config.master_seed;
  const std::uint64_t coins = d.coin_space();

  if (config.mode == GameMode::exhaustive) {
    const auto pads = pad_table(g);
    report.samples_a = detail::checked_product({pads.size(), coins});
    report.hits_a = detail::parallel_count(
        report.samples_a, config.workers, [] { return 0; },
        [&](int, std::uint64_t idx) {
          return d(pads[idx / coins], CoinTape{idx % coins});
        });
    report.samples_b =
        detail::checked_product({std::uint64_t{1} << g.out_len(), coins});
    report.hits_b = detail::parallel_count(
        report.samples_b, config.workers,
        [&] { return NBitString(g.out_len()); },
        [&](NBitString& y, std::uint64_t idx) {
          y.mutable_words()[0] = idx / coins;
          return d(y, CoinTape{idx % coins});
        });
    return report;
  }

  report.samples_a = report.samples_b = config.trials;
  report.hits_a = detail::parallel_count(
      config.trials, config.workers,
      [&] { return std::pair{NBitString(g.key_len()), NBitString(g.out_len())}; },
      [&](auto& buf, std::uint64_t t) {
        TrialStream rng(config.master_seed, kRealArm, t);
        rng.fill_bits(buf.first);
        const CoinTape tape{rng.below(coins)};
        g.expand_into(buf.first, buf.second);
        return d(buf.second, tape);
      });
  report.hits_b = detail::parallel_count(
      config.trials, config.workers, [&] { return NBitString(g.out_len()); },
      [&](NBitString& y, std::uint64_t t) {
        TrialStream rng(config.master_seed, kUniformArm, t);
        rng.fill_bits(y);
        return d(y, CoinTape{rng.below(coins)});
      });
  return report;
}

AdvantageReport stego_game(const ContentDistinguisher& d,
                           const Stegosystem& sys, const NBitString& message,
                           const GameConfig& config) {
  detail::check_stego_game(d, sys, message, config);
  const SupportFamily& family = sys.family();
  const Generator& g = sys.generator();
  const PlaneWriter writer(family.pmap());
  const std::uint64_t coins = d.coin_space();
  const std::uint64_t r = family.size();
  const std::size_t n = sys.n_bits();

  AdvantageReport report;
  report.arena = Arena::stego;
  report.mode = config.mode;
  report.master_seed = config.master_seed;

  auto make_scratch = [&] {
    return StegoScratch{family.base(0), NBitString(n),
                        NBitString(sys.key_len()), NBitString(n)};
  };

  if (config.mode == GameMode::exhaustive) {
    const auto pads = pad_table(g);
    report.samples_a = detail::checked_product({pads.size(), r, coins});
    report.hits_a = detail::parallel_count(
        report.samples_a, config.workers, make_scratch,
        [&](StegoScratch& s, std::uint64_t idx) {
          const std::uint64_t k = idx / (r * coins);
          const std::uint64_t i = (idx / coins) % r;
          s.plane.assign_xor(message, pads[k]);
          writer.write(family.base(i), s.plane, s.content);
          return d(s.content, CoinTape{idx % coins});
        });
    report.samples_b =
        detail::checked_product({r, std::uint64_t{1} << n, coins});
    report.hits_b = detail::parallel_count(
        report.samples_b, config.workers, make_scratch,
        [&](StegoScratch& s, std::uint64_t idx) {
          const std::uint64_t i = idx / ((std::uint64_t{1} << n) * coins);
          s.plane.mutable_words()[0] = (idx / coins) % (std::uint64_t{1} << n);
          writer.write(family.base(i), s.plane, s.content);
          return d(s.content, CoinTape{idx % coins});
        });
    return report;
  }

  report.samples_a = report.samples_b = config.trials;
  report.hits_a = detail::parallel_count(
      config.trials, config.workers, make_scratch,
      [&](StegoScratch& s, std::uint64_t t) {
        TrialStream rng(config.master_seed, kRealArm, t);
        rng.fill_bits(s.key);
        const std::uint64_t i = rng.below(r);
        const CoinTape tape{rng.below(coins)};
        g.expand_into(s.key, s.pad);
        s.plane.assign_xor(message, s.pad);
        writer.write(family.base(i), s.plane, s.content);
        return d(s.content, tape);
      });
  report.hits_b = detail::parallel_count(
      config.trials, config.workers, make_scratch,
      [&](StegoScratch& s, std::uint64_t t) {
        TrialStream rng(config.master_seed, kUniformArm, t);
        const std::uint64_t i = rng.below(r);
        rng.fill_bits(s.plane);
        const CoinTape tape{rng.below(coins)};
        writer.write(family.base(i), s.plane, s.content);
        return d(s.content, tape);
      });
  return report;
}

StegoSecurityReport verify_stego_security(const Stegosystem& sys,
                                          int workers) {
  detail::check_verify(sys);
  const SupportFamily& family = sys.family();
  const PlaneWriter writer(family.pmap());
  const std::size_t n = sys.n_bits();
  const std::uint64_t r = family.size();
  const std::uint64_t messages = std::uint64_t{1} << n;
  const auto pads = pad_table(sys.generator());

  std::vector<std::vector<std::uint64_t>> counts(
      messages, std::vector<std::uint64_t>(r << n, 0));
  detail::parallel_for(
      messages, workers,
      [&] {
        return StegoScratch{family.base(0), NBitString(n), NBitString(),
                            NBitString(n)};
      },
      [&](StegoScratch& s, std::uint64_t m) {
        const NBitString message = NBitString::from_value(n, m);
        auto& row = counts[m];
        for (const NBitString& pad : pads) {
          s.plane.assign_xor(message, pad);
          for (std::uint64_t i = 0; i < r; ++i) {
            writer.write(family.base(i), s.plane, s.content);
            const auto base = family.find_base(s.content);
            if (!base) {
              throw NotInFamilyError("embedding left the support family");
            }
            read_plane_into(s.content, family.pmap(), s.pad);
            ++row[(*base << n) + s.pad.value()];
          }
        }
      });
  return detail::summarize_security(sys, std::move(counts));
}

StringDistinguisher reduce(const ContentDistinguisher& inner,
                           const SupportFamily& family, const NBitString& m0) {
  if (m0.size() != family.n_bits()) {
    throw StructuralError("m0 has " + std::to_string(m0.size()) +
                          " bits, plane holds " +
                          std::to_string(family.n_bits()));
  }
  const std::uint64_t r = family.size();
  return StringDistinguisher(
      "reduction of [" + inner.description() + "]",
      reduction_cost(inner.time_budget(), family.t1(), family.n_bits()),
      detail::checked_product({r, inner.coin_space()}),
      [inner, family, m0, r](const NBitString& y, CoinTape tape) {
        const std::uint64_t i = tape.take(r);
        return inner(family.member(i, m0 ^ y), tape);
      });
}

}  // namespace stegosec
