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
#include <string>
#include <string_view>

#include "json.hpp"

#include "stegosec/rational.hpp"

namespace stegosec {

enum class GameMode { exhaustive, monte_carlo };

std::string_view to_string(GameMode mode);
GameMode parse_game_mode(std::string_view name);

struct GameConfig {
  GameMode mode = GameMode::exhaustive;
  // Samples per arm in Monte-Carlo mode; ignored when exhaustive.
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  // OpenMP threads; 0 keeps the runtime default. Results do not depend on it.
  int workers = 0;
};

// Which game produced a report. Only changes the JSON name of the first arm.
enum class Arena { stego, generator };

// Acceptance counts of a distinguishing game.
//
// Arm A is the "real" arm (stego contents or generator outputs), arm B the
// uniform one. Frequencies are exact rationals in both modes: exhaustive
// counts enumerate every (input, coin) pair, Monte-Carlo counts are hits out
// of trials.
struct AdvantageReport {
  Arena arena = Arena::stego;
  GameMode mode = GameMode::exhaustive;
  std::uint64_t hits_a = 0;
  std::uint64_t samples_a = 1;
  std::uint64_t hits_b = 0;
  std::uint64_t samples_b = 1;
  std::uint64_t master_seed = 0;

  Rational arm_a_freq() const { return {hits_a, samples_a}; }
  Rational arm_b_freq() const { return {hits_b, samples_b}; }
  Rational advantage() const { return abs_diff(arm_a_freq(), arm_b_freq()); }

  // Two-sided 99% Hoeffding half-width for one arm; 0 when exhaustive.
  double ci_99_per_arm() const;
  // Half-width for the difference: sum of the two arm half-widths.
  double ci_99() const;

  friend bool operator==(const AdvantageReport&,
                         const AdvantageReport&) = default;
};

// sqrt(ln(2 / 0.01) / (2 t))
double hoeffding_half_width_99(std::uint64_t trials);

nlohmann::ordered_json rational_json(const Rational& r);
nlohmann::ordered_json to_json(const AdvantageReport& report);

// Rounds to 12 decimals so reports print identically everywhere.
double fixed_decimal(double x);

}  // namespace stegosec
