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

#include <random>

#include "doctest.h"
#include "stegosec/bitstring.hpp"
#include "stegosec/errors.hpp"
#include "stegosec/rational.hpp"
#include "stegosec/seeding.hpp"

using namespace stegosec;

TEST_CASE("canonical value uses least-significant-first bit order") {
  NBitString s(4);
  s.set(0, true);
  s.set(2, true);
  CHECK(s.value() == 5);
  CHECK(NBitString::from_value(4, 0b1011).test(3));
  CHECK_FALSE(NBitString::from_value(4, 0b1011).test(2));
}

TEST_CASE("from_value rejects values wider than the length") {
  CHECK_THROWS_AS(NBitString::from_value(4, 16), StructuralError);
  CHECK_NOTHROW(NBitString::from_value(64, ~std::uint64_t{0}));
}

TEST_CASE("hex form is byte-wise, least significant byte first") {
  CHECK(NBitString::from_value(4, 0b1011).to_hex() == "0b");
  CHECK(NBitString::from_value(16, 0x1234).to_hex() == "3412");
  CHECK(NBitString::from_hex("3412", 16).value() == 0x1234);
  CHECK(NBitString::from_hex("0B", 4).value() == 0xb);
}

TEST_CASE("hex parsing errors are usage errors") {
  CHECK_THROWS_AS(NBitString::from_hex("0b0", 4), UsageError);
  CHECK_THROWS_AS(NBitString::from_hex("zz", 8), UsageError);
  CHECK_THROWS_AS(NBitString::from_hex("1b", 4), UsageError);  // bit 4 set
  CHECK_THROWS_AS(NBitString::from_hex("0b", 16), UsageError);
}

TEST_CASE("xor needs equal lengths") {
  NBitString a(4), b(5);
  CHECK_THROWS_AS(a ^= b, StructuralError);
  NBitString out;
  CHECK_THROWS_AS(out.assign_xor(a, b), StructuralError);
}

TEST_CASE("hex and xor properties on random wide strings") {
  std::mt19937_64 rng(20261017);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    NBitString a(n), b(n);
    for (std::size_t t = 0; t < n; ++t) {
      a.set(t, rng() & 1);
      b.set(t, rng() & 1);
    }
    CHECK(NBitString::from_hex(a.to_hex(), n) == a);
    CHECK(((a ^ b) ^ b) == a);
    NBitString c;
    c.assign_xor(a, b);
    CHECK(c == (a ^ b));
    for (std::size_t t = 0; t < n; ++t) CHECK(c.test(t) == (a.test(t) != b.test(t)));
  }
}

TEST_CASE("Rational arithmetic stays in lowest terms") {
  const Rational a(30, 32);
  CHECK(a.num() == 15);
  CHECK(a.den() == 16);
  CHECK(abs_diff(Rational(1, 1), Rational(1, 16)) == Rational(15, 16));
  CHECK(abs_diff(Rational(1, 16), Rational(1, 1)) == Rational(15, 16));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(15, 16).to_decimal(4) == "0.9375");
  CHECK(Rational(2, 3).to_decimal(3) == "0.667");
  CHECK(Rational(1, 1).to_decimal(2) == "1.00");
  CHECK(Rational(999, 1000).to_decimal(2) == "1.00");
  CHECK_THROWS_AS(Rational(1, 0), ConfigError);
}

TEST_CASE("trial streams depend only on (seed, arm, trial)") {
  TrialStream a(42, 0, 7), b(42, 0, 7), c(42, 1, 7), d(42, 0, 8);
  const auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(x != d.next());
}

TEST_CASE("bounded draws are in range and roughly uniform") {
  std::uint64_t counts[5] = {};
  for (std::uint64_t t = 0; t < 50000; ++t) {
    TrialStream s(1, 0, t);
    const auto v = s.below(5);
    REQUIRE(v < 5);
    ++counts[v];
  }
  for (auto c : counts) CHECK(c == doctest::Approx(10000).epsilon(0.05));
  TrialStream s(3, 0, 0);
  CHECK(s.below(1) == 0);
  const NBitString bits = s.bits(70);
  CHECK(bits.size() == 70);
  CHECK((bits.words()[1] >> 6) == 0);
}
