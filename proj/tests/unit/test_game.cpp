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

#include <cmath>

#include "doctest.h"
#include "stegosec/analysis.hpp"
#include "stegosec/errors.hpp"
#include "stegosec/game.hpp"
#include "stegosec/reference.hpp"
#include "stegosec/synthetic.hpp"

using namespace stegosec;

namespace {

SupportFamily family(std::size_t r, std::size_t n, std::size_t bytes = 16) {
  auto bases = synthetic_bases(r, bytes, 21);
  PositionMap pmap = designate_positions(bases[0], n, PositionPolicy::lsb_per_byte);
  return SupportFamily(std::move(bases), std::move(pmap));
}

GameConfig monte_carlo(std::uint64_t trials, std::uint64_t seed, int workers = 0) {
  GameConfig c;
  c.mode = GameMode::monte_carlo;
  c.trials = trials;
  c.master_seed = seed;
  c.workers = workers;
  return c;
}

// Accepts when plane bit 0 is set, or on a coin value when the plane is even.
ContentDistinguisher coin_plane_bit(const PositionMap& pmap) {
  return ContentDistinguisher("plane-bit", 5, 3, [pmap](const Content& c, CoinTape t) {
    return read_plane(c, pmap).test(0) || t.take(3) == 2;
  });
}

std::vector<ContentDistinguisher> shipped(const Stegosystem& sys, const NBitString& m0) {
  return {chi_square_lsb_distinguisher(),
          replay_distinguisher(m0, sys.generator_ptr(),
                               std::uint64_t{1} << sys.key_len(), sys.family().pmap()),
          constant_distinguisher<Content>(false), constant_distinguisher<Content>(true),
          coin_plane_bit(sys.family().pmap())};
}

}  // namespace

TEST_CASE("replay against constant-zero wins with advantage 15/16") {
  const Stegosystem sys(family(2, 4), make_generator(GeneratorKind::constant_zero, 8, 4));
  const NBitString m0 = NBitString::from_value(4, 0b0110);
  const auto d = replay_distinguisher(m0, sys.generator_ptr(), 256, sys.family().pmap());
  const AdvantageReport r = stego_game(d, sys, m0, GameConfig{});
  CHECK(r.arm_a_freq() == Rational(1, 1));
  CHECK(r.arm_b_freq() == Rational(1, 16));
  CHECK(r.advantage() == Rational(15, 16));
  CHECK(r.samples_a == 256 * 2);
  CHECK(r.samples_b == 2 * 16);
  CHECK(r == reference::stego_game(d, sys, m0, GameConfig{}));

  const AdvantageReport mc = stego_game(d, sys, m0, monte_carlo(10000, 4));
  CHECK(mc.arm_a_freq() == Rational(1, 1));
  CHECK(std::abs(mc.advantage().to_double() - 15.0 / 16.0) <= mc.ci_99());
}

TEST_CASE("one-time pad is perfectly stego-secure") {
  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const Stegosystem sys(family(r, n), make_generator(GeneratorKind::one_time_pad, n, n));
      const StegoSecurityReport rep = verify_stego_security(sys);
      CHECK(rep.max_tv == Rational());
      CHECK(rep.tv_by_message.size() == (std::size_t{1} << n));
      CHECK_FALSE(rep.relative_entropy_infinite);
      CHECK(rep.relative_entropy_bits == doctest::Approx(0.0));
      CHECK(rep.worst_stego.probability(r - 1, 0) == Rational(1, r << n));
    }
  }
}

TEST_CASE("constant-zero is maximally insecure") {
  const Stegosystem sys(family(3, 4), make_generator(GeneratorKind::constant_zero, 6, 4));
  const StegoSecurityReport rep = verify_stego_security(sys);
  CHECK(rep.max_tv == Rational(15, 16));
  for (const Rational& tv : rep.tv_by_message) CHECK(tv == Rational(15, 16));
  CHECK(rep.relative_entropy_infinite);
  CHECK(rep.worst_message == 0);
  CHECK(rep.worst_stego.probability(2, 0) == Rational(1, 3));
  CHECK(rep.worst_stego.probability(2, 1) == Rational());
}

TEST_CASE("short-cycle leaks a small exact bias") {
  // Pad histogram over 256 keys from scripts/oracles.py.
  const std::uint64_t pads[16] = {18, 13, 15, 18, 19, 12, 14, 18,
                                  12, 18, 20, 14, 15, 21, 16, 13};
  std::uint64_t l1 = 0;
  for (std::uint64_t c : pads) l1 += c > 16 ? c - 16 : 16 - c;
  CHECK(Rational(l1, 2 * 256) == Rational(5, 64));

  const Stegosystem sys(family(2, 4), make_generator(GeneratorKind::short_cycle, 8, 4));
  const StegoSecurityReport rep = verify_stego_security(sys);
  for (const Rational& tv : rep.tv_by_message) CHECK(tv == Rational(5, 64));
  CHECK(rep.max_tv == Rational(5, 64));
  CHECK_FALSE(rep.relative_entropy_infinite);
  double kl = 0.0;
  for (std::uint64_t c : pads) kl += (1.0 / 16.0) * std::log2((1.0 / 16.0) / (c / 256.0));
  CHECK(rep.relative_entropy_bits == doctest::Approx(kl).epsilon(1e-12));
}

TEST_CASE("OpenMP verification matches the serial reference") {
  for (auto kind : {GeneratorKind::short_cycle, GeneratorKind::counter_stream}) {
    const Stegosystem sys(family(3, 5), make_generator(kind, 6, 5));
    const StegoSecurityReport ref = reference::verify_stego_security(sys);
    for (int workers : {1, 2, 4}) CHECK(verify_stego_security(sys, workers) == ref);
  }
}

TEST_CASE("verification bounds") {
  CHECK_THROWS_AS(verify_stego_security(Stegosystem(
                      family(1, 11), make_generator(GeneratorKind::one_time_pad, 11, 11))),
                  ConfigError);
  CHECK_THROWS_AS(verify_stego_security(Stegosystem(
                      family(1, 4), make_generator(GeneratorKind::counter_stream, 11, 4))),
                  ConfigError);
}

TEST_CASE("stego game rejects bad configurations") {
  const Stegosystem sys(family(2, 4), make_generator(GeneratorKind::counter_stream, 128, 4));
  const auto d = constant_distinguisher<Content>(true);
  CHECK_THROWS_AS(stego_game(d, sys, NBitString(4), GameConfig{}), ConfigError);
  CHECK_THROWS_AS(stego_game(d, sys, NBitString(4), monte_carlo(0, 1)), ConfigError);
  CHECK_THROWS_AS(stego_game(d, sys, NBitString(5), monte_carlo(10, 1)), StructuralError);
}

TEST_CASE("Monte-Carlo stego game is independent of the worker count") {
  const Stegosystem sys(family(3, 6, 64),
                        make_generator(GeneratorKind::short_cycle, 8, 6));
  const NBitString m0 = NBitString::from_value(6, 5);
  const auto d = coin_plane_bit(sys.family().pmap());
  const AdvantageReport ref = reference::stego_game(d, sys, m0, monte_carlo(3000, 99));
  for (int workers : {1, 2, 8}) CHECK(stego_game(d, sys, m0, monte_carlo(3000, 99, workers)) == ref);
  CHECK(to_json(ref).dump() == to_json(stego_game(d, sys, m0, monte_carlo(3000, 99, 3))).dump());
}

TEST_CASE("reduce feeds the inner distinguisher the member it would see") {
  const SupportFamily fam = family(3, 4);
  const NBitString m0 = NBitString::from_value(4, 0b1010);
  const auto inner = coin_plane_bit(fam.pmap());
  const StringDistinguisher outer = reduce(inner, fam, m0);
  CHECK(outer.coin_space() == 3 * 3);
  for (std::uint64_t y = 0; y < 16; ++y) {
    const NBitString ys = NBitString::from_value(4, y);
    for (std::uint64_t coin = 0; coin < outer.coin_space(); ++coin) {
      const Content x = fam.member(coin % 3, m0 ^ ys);
      CHECK(outer(ys, {coin}) == inner(x, {coin / 3}));
    }
  }
  CHECK_THROWS_AS(reduce(inner, fam, NBitString(5)), StructuralError);
}

TEST_CASE("reduction cost is inner + T1 + N + 1") {
  CHECK(reduction_cost(100, 7, 4) == 112);
  const SupportFamily fam(synthetic_bases(2, 8, 1),
                          designate_positions(synthetic_bases(1, 8)[0], 4,
                                              PositionPolicy::lsb_per_byte),
                          Cost{7});
  const auto inner = ContentDistinguisher("budget-100", 100, 1,
                                          [](const Content&, CoinTape) { return true; });
  CHECK(reduce(inner, fam, NBitString(4)).time_budget() == 112);
}

TEST_CASE("advantage transfers exactly through the reduction") {
  const NBitString m0 = NBitString::from_value(4, 0b0011);
  for (auto kind : {GeneratorKind::one_time_pad, GeneratorKind::constant_zero,
                    GeneratorKind::short_cycle}) {
    const std::size_t l = kind == GeneratorKind::one_time_pad ? 4 : 8;
    const Stegosystem sys(family(2, 4, 64), make_generator(kind, l, 4));
    for (const auto& d : shipped(sys, m0)) {
      const AdvantageReport stego = stego_game(d, sys, m0, GameConfig{});
      const AdvantageReport gen =
          generator_game(reduce(d, sys.family(), m0), sys.generator(), GameConfig{});
      CHECK_MESSAGE(stego.arm_a_freq() == gen.arm_a_freq(), d.description());
      CHECK_MESSAGE(stego.arm_b_freq() == gen.arm_b_freq(), d.description());
      CHECK(stego.advantage() <= gen.advantage());
    }
  }
}

TEST_CASE("empirical distribution bounds") {
  const Stegosystem sys(family(2, 3), make_generator(GeneratorKind::one_time_pad, 3, 3));
  const StegoSecurityReport rep = verify_stego_security(sys);
  CHECK_THROWS_AS(rep.cover.probability(2, 0), StructuralError);
  CHECK_THROWS_AS(rep.cover.probability(0, 8), StructuralError);
  CHECK(rep.cover.probability(1, 7) == Rational(1, 16));
}
