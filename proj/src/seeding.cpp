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

#include "stegosec/seeding.hpp"

namespace stegosec {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kTrialStride = 0xd1b54a32d192ed03ULL;
}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

TrialStream::TrialStream(std::uint64_t master_seed, std::uint64_t arm,
                         std::uint64_t trial) noexcept {
  const std::uint64_t arm_key = mix64(master_seed ^ ((arm + 1) * kGolden));
  state_ = mix64(arm_key + trial * kTrialStride);
}

std::uint64_t TrialStream::next() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

std::uint64_t TrialStream::below(std::uint64_t bound) noexcept {
  if (bound <= 1) return 0;
  // Reject the low (2^64 mod bound) values so the remainder is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

void TrialStream::fill_bits(NBitString& out) noexcept {
  for (std::uint64_t& w : out.mutable_words()) w = next();
  out.clear_padding();
}

NBitString TrialStream::bits(std::size_t n) {
  NBitString out(n);
  fill_bits(out);
  return out;
}

}  // namespace stegosec
