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

#include "game_common.hpp"

#include <cmath>
#include <string>

#include "stegosec/errors.hpp"

namespace stegosec::detail {

void check_monte_carlo(const GameConfig& config) {
  if (config.mode == GameMode::monte_carlo && config.trials == 0) {
    throw ConfigError("Monte-Carlo game needs at least one trial per arm");
  }
}

NBitString key_from_index(std::size_t key_len, std::uint64_t k) {
  NBitString key(key_len);
  if (key_len > 0) key.mutable_words()[0] = k;
  return key;
}

std::uint64_t checked_product(std::initializer_list<std::uint64_t> factors) {
  unsigned __int128 product = 1;
  for (std::uint64_t f : factors) {
    product *= f;
    if (product > kMaxExhaustiveSamples) {
      throw ConfigError("exhaustive enumeration exceeds 2^40 samples");
    }
  }
  return static_cast<std::uint64_t>(product);
}

void check_generator_game(const StringDistinguisher& d, const Generator& g,
                          const GameConfig& config) {
  check_monte_carlo(config);
  (void)d;
  if (config.mode == GameMode::exhaustive &&
      (g.key_len() > kGeneratorGameMaxBits ||
       g.out_len() > kGeneratorGameMaxBits)) {
    throw ConfigError("exhaustive generator game needs key and output lengths <= " +
                      std::to_string(kGeneratorGameMaxBits) + ", got " +
                      std::to_string(g.key_len()) + " and " +
                      std::to_string(g.out_len()));
  }
}

void check_stego_game(const ContentDistinguisher& d, const Stegosystem& sys,
                      const NBitString& message, const GameConfig& config) {
  check_monte_carlo(config);
  (void)d;
  if (message.size() != sys.n_bits()) {
    throw StructuralError("message has " + std::to_string(message.size()) +
                          " bits, plane holds " + std::to_string(sys.n_bits()));
  }
  if (config.mode == GameMode::exhaustive &&
      (sys.n_bits() > kStegoGameMaxBits || sys.key_len() > kStegoGameMaxBits)) {
    throw ConfigError("exhaustive stego game needs N and key length <= " +
                      std::to_string(kStegoGameMaxBits) + ", got " +
                      std::to_string(sys.n_bits()) + " and " +
                      std::to_string(sys.key_len()));
  }
}

void check_verify(const Stegosystem& sys) {
  const std::size_t n = sys.n_bits();
  const std::size_t l = sys.key_len();
  if (n > kStegoGameMaxBits || l > kStegoGameMaxBits) {
    throw ConfigError("stego-security verification needs N and key length <= " +
                      std::to_string(kStegoGameMaxBits) + ", got " +
                      std::to_string(n) + " and " + std::to_string(l));
  }
  const unsigned __int128 work = static_cast<unsigned __int128>(sys.family().size())
                                 << (2 * n + l);
  if (work > kVerifyMaxWork) {
    throw ConfigError("stego-security verification exceeds 2^34 embeddings");
  }
}

StegoSecurityReport summarize_security(
    const Stegosystem& sys, std::vector<std::vector<std::uint64_t>> counts) {
  const std::size_t r = sys.family().size();
  const std::size_t n = sys.n_bits();
  const std::size_t l = sys.key_len();
  const std::uint64_t members = static_cast<std::uint64_t>(r) << n;
  const std::uint64_t embeddings = static_cast<std::uint64_t>(r) << l;
  const std::uint64_t per_key_mass = std::uint64_t{1} << l;

  StegoSecurityReport report;
  report.cover = {r, n, std::vector<std::uint64_t>(members, 1), members};
  report.tv_by_message.reserve(counts.size());

  for (std::uint64_t m = 0; m < counts.size(); ++m) {
    // With D = r 2^l 2^N, p = c 2^N / D and q = 2^l / D, so
    // TV = sum |c 2^N - 2^l| / (2 D).
    unsigned __int128 l1 = 0;
    for (std::uint64_t c : counts[m]) {
      const unsigned __int128 scaled = static_cast<unsigned __int128>(c) << n;
      l1 += scaled > per_key_mass ? scaled - per_key_mass : per_key_mass - scaled;
    }
    const unsigned __int128 den =
        (static_cast<unsigned __int128>(embeddings) << n) * 2;
    const unsigned __int128 g = [](unsigned __int128 a, unsigned __int128 b) {
      while (b != 0) {
        const unsigned __int128 t = a % b;
        a = b;
        b = t;
      }
      return a;
    }(l1, den);
    const Rational tv(static_cast<std::uint64_t>(l1 / g),
                      static_cast<std::uint64_t>(den / g));
    if (m == 0 || tv > report.max_tv) {
      report.max_tv = tv;
      report.worst_message = m;
    }
    report.tv_by_message.push_back(tv);
  }

  report.worst_stego = {r, n, std::move(counts[report.worst_message]),
                        embeddings};

  // D(cover || stego) = sum q log2(q / p) over all members.
  double kl = 0.0;
  const double q = 1.0 / static_cast<double>(members);
  for (std::uint64_t c : report.worst_stego.counts) {
    if (c == 0) {
      report.relative_entropy_infinite = true;
      break;
    }
    const double p = static_cast<double>(c) / static_cast<double>(embeddings);
    kl += q * std::log2(q / p);
  }
  report.relative_entropy_bits =
      report.relative_entropy_infinite ? 0.0 : std::max(kl, 0.0);
  return report;
}

}  // namespace stegosec::detail

namespace stegosec {

Rational EmpiricalDistribution::probability(std::size_t i,
                                            std::uint64_t j) const {
  if (i >= bases || j >= (std::uint64_t{1} << plane_bits)) {
    throw StructuralError("member (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") outside the distribution");
  }
  return {counts[(static_cast<std::uint64_t>(i) << plane_bits) + j], total};
}

Cost reduction_cost(Cost inner_budget, Cost t1, std::size_t n_bits) {
  return inner_budget + t1 + n_bits + 1;
}

}  // namespace stegosec
