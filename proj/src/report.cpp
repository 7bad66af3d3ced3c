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

#include "stegosec/report.hpp"

#include <cmath>

#include "stegosec/errors.hpp"

namespace stegosec {

std::string_view to_string(GameMode mode) {
  return mode == GameMode::exhaustive ? "exhaustive" : "monte-carlo";
}

GameMode parse_game_mode(std::string_view name) {
  if (name == "exhaustive") return GameMode::exhaustive;
  if (name == "monte-carlo" || name == "mc") return GameMode::monte_carlo;
  throw UsageError("unknown game mode '" + std::string(name) + "'");
}

double hoeffding_half_width_99(std::uint64_t trials) {
  if (trials == 0) throw ConfigError("Hoeffding bound needs at least one trial");
  return std::sqrt(std::log(2.0 / 0.01) / (2.0 * static_cast<double>(trials)));
}

double AdvantageReport::ci_99_per_arm() const {
  if (mode == GameMode::exhaustive) return 0.0;
  return hoeffding_half_width_99(samples_a);
}

double AdvantageReport::ci_99() const {
  if (mode == GameMode::exhaustive) return 0.0;
  return hoeffding_half_width_99(samples_a) + hoeffding_half_width_99(samples_b);
}

double fixed_decimal(double x) { return std::round(x * 1e12) / 1e12; }

nlohmann::ordered_json rational_json(const Rational& r) {
  nlohmann::ordered_json j;
  j["num"] = r.num();
  j["den"] = r.den();
  j["decimal"] = r.to_decimal(12);
  return j;
}

nlohmann::ordered_json to_json(const AdvantageReport& report) {
  nlohmann::ordered_json j;
  j["arena"] = report.arena == Arena::stego ? "stego" : "generator";
  j["mode"] = to_string(report.mode);
  j[report.arena == Arena::stego ? "arm_stego_freq" : "arm_g_freq"] =
      rational_json(report.arm_a_freq());
  j["arm_uniform_freq"] = rational_json(report.arm_b_freq());
  j["advantage"] = rational_json(report.advantage());
  j["trials"] = report.samples_a;
  if (report.samples_b != report.samples_a) {
    j["trials_uniform"] = report.samples_b;
  }
  j["ci_99"] = fixed_decimal(report.ci_99());
  j["master_seed"] = report.master_seed;
  return j;
}

}  // namespace stegosec
