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

#include "stegosec/analysis.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <unordered_set>
#include <vector>

#include "stegosec/errors.hpp"

namespace stegosec {

namespace {

constexpr double kEpsilon = 1e-15;
constexpr int kMaxIterations = 10000;
constexpr double kTiny = std::numeric_limits<double>::min() / kEpsilon;

// P(a, x) by its power series; converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEpsilon) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by the modified Lentz continued fraction; for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0 || std::isnan(x)) {
    throw ConfigError("incomplete gamma needs a > 0 and x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_fraction(a, x);
}

double chi_square_p_value(double statistic, unsigned dof) {
  if (dof == 0) throw ConfigError("chi-square needs at least one degree of freedom");
  return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square_statistic(std::span<const double> observed,
                                     std::span<const double> expected) {
  if (observed.size() != expected.size()) {
    throw ConfigError("observed and expected have different lengths");
  }
  if (observed.size() < 2) throw ConfigError("chi-square needs at least 2 categories");
  ChiSquareResult r;
  for (std::size_t c = 0; c < observed.size(); ++c) {
    if (!(expected[c] > 0.0)) {
      throw ConfigError("expected count of category " + std::to_string(c) +
                        " is not positive");
    }
    const double diff = observed[c] - expected[c];
    r.statistic += diff * diff / expected[c];
  }
  r.dof = static_cast<unsigned>(observed.size() - 1);
  r.p_value = chi_square_p_value(r.statistic, r.dof);
  return r;
}

PairsOfValuesReport pairs_of_values(const Content& content) {
  std::array<std::uint64_t, 256> histogram{};
  for (std::uint8_t byte : content.payload()) ++histogram[byte];

  std::vector<double> observed;
  std::vector<double> expected;
  for (std::size_t u = 0; u < 128; ++u) {
    const std::uint64_t total = histogram[2 * u] + histogram[2 * u + 1];
    if (total == 0) continue;
    observed.push_back(static_cast<double>(histogram[2 * u]));
    expected.push_back(static_cast<double>(total) / 2.0);
  }

  PairsOfValuesReport report;
  report.nonempty_pairs = observed.size();
  if (observed.size() < 2) {
    report.undecidable = true;
    return report;
  }
  report.chi_square = chi_square_statistic(observed, expected);
  return report;
}

ContentDistinguisher chi_square_lsb_distinguisher(double threshold_p) {
  if (!(threshold_p > 0.0 && threshold_p < 1.0)) {
    throw ConfigError("chi-square threshold must lie in (0, 1)");
  }
  // One histogram pass plus 128 pair terms.
  constexpr Cost kBudget = 256 + 128;
  return ContentDistinguisher(
      "chi-square pairs-of-values, accept p > " + std::to_string(threshold_p),
      kBudget, 1, [threshold_p](const Content& c, CoinTape) {
        const PairsOfValuesReport r = pairs_of_values(c);
        return !r.undecidable && r.chi_square.p_value > threshold_p;
      });
}

ContentDistinguisher replay_distinguisher(const NBitString& m0,
                                          GeneratorPtr weak_g,
                                          std::uint64_t key_space_limit,
                                          PositionMap pmap) {
  if (!weak_g) throw ConfigError("replay distinguisher needs a generator");
  if (m0.size() != weak_g->out_len() || pmap.size() != m0.size()) {
    throw StructuralError("message, generator output and plane lengths differ");
  }
  const std::size_t key_len = weak_g->key_len();
  if (key_space_limit > kReplayMaxKeys ||
      (key_len < 64 && key_space_limit > (std::uint64_t{1} << key_len))) {
    throw ConfigError("replay key space of " + std::to_string(key_space_limit) +
                      " keys exceeds 2^" + std::to_string(key_len) +
                      " or the enumeration cap");
  }

  auto reachable = std::make_shared<std::unordered_set<NBitString>>();
  NBitString pad;
  for (std::uint64_t k = 0; k < key_space_limit; ++k) {
    NBitString key(key_len);
    if (key_len > 0) key.mutable_words()[0] = k;
    weak_g->expand_into(key, pad);
    reachable->insert(m0 ^ pad);
  }

  const Cost budget =
      key_space_limit * (weak_g->time_budget() + m0.size()) + m0.size();
  return ContentDistinguisher(
      "replay of " + std::to_string(key_space_limit) + " keys of " +
          std::string(to_string(weak_g->kind())),
      budget, 1,
      [reachable, pmap = std::move(pmap)](const Content& c, CoinTape) {
        return reachable->contains(read_plane(c, pmap));
      });
}

StringDistinguisher zero_string_distinguisher(std::size_t n_bits) {
  const NBitString zero(n_bits);
  return StringDistinguisher("all-zero string", n_bits, 1,
                             [zero](const NBitString& y, CoinTape) {
                               return y == zero;
                             });
}

}  // namespace stegosec
