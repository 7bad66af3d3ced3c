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

// Serial reference kernels against the OpenMP ones. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "stegosec/analysis.hpp"
#include "stegosec/game.hpp"
#include "stegosec/reference.hpp"
#include "stegosec/synthetic.hpp"

namespace {

using namespace stegosec;

Stegosystem make_system(GeneratorKind kind, std::size_t r, std::size_t n,
                        std::size_t key_len, std::size_t bytes) {
  auto bases = synthetic_bases(r, bytes);
  PositionMap pmap = designate_positions(bases.front(), n, PositionPolicy::lsb_per_byte);
  return Stegosystem(SupportFamily(std::move(bases), std::move(pmap)),
                     make_generator(kind, key_len, n));
}

void BM_VerifySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Stegosystem sys = make_system(GeneratorKind::one_time_pad, 2, n, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::verify_stego_security(sys));
  }
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Stegosystem sys = make_system(GeneratorKind::one_time_pad, 2, n, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_stego_security(sys));
  }
}

GameConfig monte_carlo(std::uint64_t trials) {
  GameConfig config;
  config.mode = GameMode::monte_carlo;
  config.trials = trials;
  config.master_seed = 7;
  return config;
}

void BM_ChiSquareGameSerial(benchmark::State& state) {
  const Stegosystem sys =
      make_system(GeneratorKind::counter_stream, 2, 4096, 128, 4096);
  const auto d = chi_square_lsb_distinguisher();
  const NBitString m(4096);
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::stego_game(d, sys, m, monte_carlo(trials)));
  }
}

void BM_ChiSquareGameParallel(benchmark::State& state) {
  const Stegosystem sys =
      make_system(GeneratorKind::counter_stream, 2, 4096, 128, 4096);
  const auto d = chi_square_lsb_distinguisher();
  const NBitString m(4096);
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stego_game(d, sys, m, monte_carlo(trials)));
  }
}

void BM_ExhaustiveReplaySerial(benchmark::State& state) {
  const Stegosystem sys = make_system(GeneratorKind::short_cycle, 4, 8, 8, 64);
  const NBitString m = NBitString::from_value(8, 0x5a);
  const auto d = replay_distinguisher(m, sys.generator_ptr(), 256, sys.family().pmap());
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::stego_game(d, sys, m, GameConfig{}));
  }
}

void BM_ExhaustiveReplayParallel(benchmark::State& state) {
  const Stegosystem sys = make_system(GeneratorKind::short_cycle, 4, 8, 8, 64);
  const NBitString m = NBitString::from_value(8, 0x5a);
  const auto d = replay_distinguisher(m, sys.generator_ptr(), 256, sys.family().pmap());
  for (auto _ : state) {
    benchmark::DoNotOptimize(stego_game(d, sys, m, GameConfig{}));
  }
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChiSquareGameSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChiSquareGameParallel)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveReplaySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveReplayParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
