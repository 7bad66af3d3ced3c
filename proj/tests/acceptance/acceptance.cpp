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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stegosec/analysis.hpp"
#include "stegosec/errors.hpp"
#include "stegosec/game.hpp"
#include "stegosec/synthetic.hpp"

using namespace stegosec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SupportFamily family(std::size_t r, std::size_t n, std::size_t bytes) {
  auto bases = synthetic_bases(r, bytes, 2026);
  PositionMap pmap = designate_positions(bases[0], n, PositionPolicy::lsb_per_byte);
  return SupportFamily(std::move(bases), std::move(pmap));
}

GameConfig monte_carlo(std::uint64_t trials, std::uint64_t seed, int workers) {
  GameConfig c;
  c.mode = GameMode::monte_carlo;
  c.trials = trials;
  c.master_seed = seed;
  c.workers = workers;
  return c;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

// 1. Extraction inverts embedding over every (i, m, k) with r = 2, N = l = 8.
Outcome correctness() {
  Outcome o;
  const auto start = Clock::now();
  const Stegosystem sys(family(2, 8, 64), make_generator(GeneratorKind::short_cycle, 8, 8));
  std::uint64_t checked = 0, failures = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::uint64_t m = 0; m < 256; ++m) {
      const NBitString msg = NBitString::from_value(8, m);
      for (std::uint64_t k = 0; k < 256; ++k) {
        const NBitString key = NBitString::from_value(8, k);
        failures += sys.extract(sys.embed(i, msg, key), sys.inv(key)) != msg;
        ++checked;
      }
    }
  }
  const double elapsed = seconds_since(start);
  o.require(checked == 2 * 256 * 256, "wrong triple count");
  o.require(failures == 0, std::to_string(failures) + " triples failed");
  o.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
  o.detail << (o.pass ? "" : "; ") << checked << " triples, " << failures
           << " failures, " << elapsed << " s";
  return o;
}

// 2. One-time pad: total-variation distance exactly 0 for every message.
Outcome otp_security() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t configs = 0, messages = 0;
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const Stegosystem sys(family(r, n, 64), make_generator(GeneratorKind::one_time_pad, n, n));
      const StegoSecurityReport rep = verify_stego_security(sys);
      for (const Rational& tv : rep.tv_by_message) {
        o.require(tv == Rational(), "r=" + std::to_string(r) + " N=" + std::to_string(n) +
                                        " has nonzero distance");
      }
      o.require(rep.tv_by_message.size() == (std::size_t{1} << n), "missing messages");
      messages += rep.tv_by_message.size();
      ++configs;
    }
  }
  o.detail << (o.pass ? "" : "; ") << configs << " configurations, " << messages
           << " messages, all TV = 0, " << seconds_since(start) << " s";
  return o;
}

// 3. Constant-zero against replay: 15/16 exactly and within the MC band.
Outcome negative_control() {
  Outcome o;
  const Stegosystem sys(family(1, 4, 64), make_generator(GeneratorKind::constant_zero, 8, 4));
  const NBitString m0 = NBitString::from_value(4, 0b1101);
  const auto d = replay_distinguisher(m0, sys.generator_ptr(), 256, sys.family().pmap());
  const AdvantageReport ex = stego_game(d, sys, m0, GameConfig{});
  o.require(ex.advantage() == Rational(15, 16),
            "exhaustive advantage " + ex.advantage().to_decimal());
  const AdvantageReport mc = stego_game(d, sys, m0, monte_carlo(10000, 1, 0));
  const double gap = std::abs(mc.advantage().to_double() - 15.0 / 16.0);
  o.require(mc.samples_a == 10000 && mc.samples_b == 10000, "wrong trial count");
  o.require(gap <= mc.ci_99(), "MC estimate outside the band");
  o.detail << (o.pass ? "" : "; ") << "exhaustive " << ex.advantage().num() << "/"
           << ex.advantage().den() << ", MC " << mc.advantage().to_decimal(6) << " (|gap| "
           << gap << " <= " << mc.ci_99() << ")";
  return o;
}

// 4. Exact advantage transfer through the reduction plus cost accounting.
Outcome advantage_transfer() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t r : {1, 2, 3}) {
    for (std::size_t n : {3, 4, 6}) {
      const NBitString m0 = NBitString::from_value(n, 0b101 & ((1U << n) - 1));
      for (auto kind : {GeneratorKind::one_time_pad, GeneratorKind::constant_zero,
                        GeneratorKind::short_cycle}) {
        const std::size_t l = kind == GeneratorKind::one_time_pad ? n : 8;
        const Stegosystem sys(family(r, n, 64), make_generator(kind, l, n));
        const std::vector<ContentDistinguisher> shipped{
            chi_square_lsb_distinguisher(),
            chi_square_lsb_distinguisher(0.5),
            replay_distinguisher(m0, sys.generator_ptr(), std::uint64_t{1} << l,
                                 sys.family().pmap()),
            constant_distinguisher<Content>(false),
            constant_distinguisher<Content>(true)};
        for (const auto& d : shipped) {
          const std::string where = std::string(to_string(kind)) + " r=" + std::to_string(r) +
                                    " N=" + std::to_string(n) + " " + d.description();
          const StringDistinguisher w = reduce(d, sys.family(), m0);
          const AdvantageReport s = stego_game(d, sys, m0, GameConfig{});
          const AdvantageReport g = generator_game(w, sys.generator(), GameConfig{});
          o.require(s.advantage() == g.advantage(), "advantage differs for " + where);
          o.require(s.arm_a_freq() == g.arm_a_freq() && s.arm_b_freq() == g.arm_b_freq(),
                    "arm frequencies differ for " + where);
          o.require(w.time_budget() ==
                        d.time_budget() + sys.family().t1() + sys.n_bits() + 1,
                    "budget arithmetic wrong for " + where);
          ++cases;
        }
      }
    }
  }
  o.detail << (o.pass ? "" : "; ") << cases << " (generator, family, distinguisher) cases equal";
  return o;
}

// 5. Chi-square oracle value and the counter-stream band.
Outcome chi_square_sanity() {
  Outcome o;
  const auto start = Clock::now();
  const double p = chi_square_p_value(4.0, 1);
  const double oracle = std::erfc(std::sqrt(2.0));  // Q(1/2, 2)
  o.require(std::abs(p - oracle) < 1e-6, "p-value " + std::to_string(p));
  o.require(std::abs(p - 0.0455) < 5e-5, "p-value not about 0.0455");

  const std::size_t n = 4096;
  const Stegosystem sys(family(4, n, n), make_generator(GeneratorKind::counter_stream, 128, n));
  NBitString m(n);
  for (std::size_t t = 0; t < n; t += 3) m.set(t, true);
  const AdvantageReport rep =
      stego_game(chi_square_lsb_distinguisher(), sys, m, monte_carlo(10000, 5, 0));
  const double elapsed = seconds_since(start);
  o.require(rep.samples_a == 10000, "wrong trial count");
  o.require(rep.advantage().to_double() <= 0.05,
            "advantage " + rep.advantage().to_decimal(6));
  o.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
  o.detail << (o.pass ? "" : "; ") << "p = " << p << " (oracle " << oracle
           << "), counter-stream advantage " << rep.advantage().to_decimal(6) << ", "
           << elapsed << " s";
  return o;
}

std::string run_cli(const std::string& args, int& code) {
  const std::string cmd = std::string(STEGOSEC_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// 6. Same seed, same JSON bytes, whatever the worker count.
Outcome determinism() {
  Outcome o;
  const std::vector<std::string> invocations{
      "game --n 64 --bases 3 --gen counter --detector chi2 --msg 0123456789abcdef "
      "--mode monte-carlo --trials 2000 --seed 11",
      "game --n 8 --bases 2 --gen short-cycle --detector replay --msg 5a "
      "--mode monte-carlo --trials 5000 --seed 12",
      "game --n 8 --bases 2 --gen zero --arena generator --detector zero --msg 00 "
      "--mode monte-carlo --trials 5000 --seed 13",
      "game --n 6 --bases 4 --gen short-cycle --arena generator --detector chi2 --msg 2a "
      "--mode monte-carlo --trials 3000 --seed 14",
  };
  for (const std::string& args : invocations) {
    int code = 0;
    const std::string one = run_cli(args + " --workers 1", code);
    o.require(code == 0, "exit " + std::to_string(code) + " for: " + args);
    for (int workers : {2, 8}) {
      int c = 0;
      const std::string other = run_cli(args + " --workers " + std::to_string(workers), c);
      o.require(c == 0 && other == one,
                "output differs with " + std::to_string(workers) + " workers: " + args);
    }
  }
  // Same check in-process on the library entry points.
  const Stegosystem sys(family(3, 32, 64), make_generator(GeneratorKind::counter_stream, 64, 32));
  const NBitString m = NBitString::from_value(32, 0xdeadbeef);
  const auto d = chi_square_lsb_distinguisher();
  const std::string ref = to_json(stego_game(d, sys, m, monte_carlo(4000, 21, 1))).dump();
  for (int workers : {2, 8}) {
    o.require(to_json(stego_game(d, sys, m, monte_carlo(4000, 21, workers))).dump() == ref,
              "in-process report differs with " + std::to_string(workers) + " workers");
  }
  o.detail << (o.pass ? "" : "; ") << invocations.size()
           << " CLI invocations and 1 in-process game identical across 1, 2, 8 workers";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 correctness round trip", correctness},
      {"2 one-time pad stego-security", otp_security},
      {"3 constant-zero negative control", negative_control},
      {"4 advantage transfer and cost", advantage_transfer},
      {"5 chi-square sanity", chi_square_sanity},
      {"6 determinism across workers", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": "
              << o.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
