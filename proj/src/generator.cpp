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

#include "stegosec/generator.hpp"

#include <array>
#include <mutex>
#include <string>
#include <vector>

#include <sodium.h>

#include "stegosec/errors.hpp"

namespace stegosec {

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::one_time_pad:
      return "otp";
    case GeneratorKind::counter_stream:
      return "counter";
    case GeneratorKind::constant_zero:
      return "zero";
    case GeneratorKind::short_cycle:
      return "short-cycle";
  }
  return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "otp" || name == "one-time-pad") return GeneratorKind::one_time_pad;
  if (name == "counter" || name == "counter-stream") {
    return GeneratorKind::counter_stream;
  }
  if (name == "zero" || name == "constant-zero") {
    return GeneratorKind::constant_zero;
  }
  if (name == "short-cycle" || name == "lcg") return GeneratorKind::short_cycle;
  throw UsageError("unknown generator '" + std::string(name) + "'");
}

NBitString Generator::expand(const NBitString& key) const {
  NBitString out(out_len_);
  expand_into(key, out);
  return out;
}

void Generator::expand_into(const NBitString& key, NBitString& out) const {
  if (key.size() != key_len_) {
    throw StructuralError("key has " + std::to_string(key.size()) +
                          " bits, generator expects " +
                          std::to_string(key_len_));
  }
  if (out.size() != out_len_) out = NBitString(out_len_);
  for (std::uint64_t& w : out.mutable_words()) w = 0;
  do_expand(key, out);
}

namespace {

class OneTimePad final : public Generator {
 public:
  explicit OneTimePad(std::size_t n)
      : Generator(GeneratorKind::one_time_pad, n, n, n) {}

 private:
  void do_expand(const NBitString& key, NBitString& out) const override {
    auto dst = out.mutable_words();
    const auto src = key.words();
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = src[w];
  }
};

class ConstantZero final : public Generator {
 public:
  ConstantZero(std::size_t key_len, std::size_t out_len)
      : Generator(GeneratorKind::constant_zero, key_len, out_len, out_len) {}

 private:
  void do_expand(const NBitString&, NBitString&) const override {}
};

class ShortCycle final : public Generator {
 public:
  ShortCycle(std::size_t key_len, std::size_t out_len)
      : Generator(GeneratorKind::short_cycle, key_len, out_len, 2 * out_len) {}

 private:
  void do_expand(const NBitString& key, NBitString& out) const override {
    std::uint32_t state = key.empty() ? 0U : static_cast<std::uint32_t>(key.value());
    auto words = out.mutable_words();
    for (std::size_t t = 0; t < out.size(); ++t) {
      state = (kShortCycleMultiplier * state + kShortCycleIncrement) & 0xFFFFU;
      words[t / 64] |= std::uint64_t{(state >> 15) & 1U} << (t % 64);
    }
  }
};

// Key schedule: BLAKE2b-256("stegosec/counter-stream" || key_len as 8 LE bytes
// || key bytes) keys ChaCha20 (IETF variant, all-zero nonce, counter 0). The
// first out_len keystream bits form the pad.
class CounterStream final : public Generator {
 public:
  CounterStream(std::size_t key_len, std::size_t out_len)
      : Generator(GeneratorKind::counter_stream, key_len, out_len,
                  out_len + 64 * ((out_len + 511) / 512 + 1)) {
    static std::once_flag init;
    std::call_once(init, [] {
      if (sodium_init() < 0) throw Error("libsodium failed to initialise");
    });
  }

 private:
  void do_expand(const NBitString& key, NBitString& out) const override {
    static constexpr std::string_view kDomain = "stegosec/counter-stream";
    std::array<unsigned char, crypto_stream_chacha20_ietf_KEYBYTES> stream_key{};
    crypto_generichash_state st;
    crypto_generichash_init(&st, nullptr, 0, stream_key.size());
    crypto_generichash_update(
        &st, reinterpret_cast<const unsigned char*>(kDomain.data()),
        kDomain.size());
    std::array<unsigned char, 8> len_le{};
    for (std::size_t b = 0; b < 8; ++b) {
      len_le[b] = static_cast<unsigned char>(key_len() >> (8 * b));
    }
    crypto_generichash_update(&st, len_le.data(), len_le.size());
    const auto key_bytes = key.to_bytes();
    crypto_generichash_update(&st, key_bytes.data(), key_bytes.size());
    crypto_generichash_final(&st, stream_key.data(), stream_key.size());

    std::array<unsigned char, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
    std::vector<unsigned char> stream((out.size() + 7) / 8);
    crypto_stream_chacha20_ietf(stream.data(), stream.size(), nonce.data(),
                                stream_key.data());
    out = NBitString::from_bytes(stream, out.size());
    sodium_memzero(stream_key.data(), stream_key.size());
  }
};

}  // namespace

GeneratorPtr make_generator(GeneratorKind kind, std::size_t key_len,
                            std::size_t out_len) {
  if (out_len == 0) throw ConfigError("generator output length must be positive");
  switch (kind) {
    case GeneratorKind::one_time_pad:
      if (key_len != out_len) {
        throw ConfigError("one-time pad needs key length " +
                          std::to_string(key_len) + " == output length " +
                          std::to_string(out_len));
      }
      return std::make_shared<OneTimePad>(out_len);
    case GeneratorKind::counter_stream:
      if (key_len == 0) throw ConfigError("counter stream needs a nonempty key");
      return std::make_shared<CounterStream>(key_len, out_len);
    case GeneratorKind::constant_zero:
      return std::make_shared<ConstantZero>(key_len, out_len);
    case GeneratorKind::short_cycle:
      if (key_len > 16) {
        throw ConfigError("short-cycle generator keys are at most 16 bits, got " +
                          std::to_string(key_len));
      }
      return std::make_shared<ShortCycle>(key_len, out_len);
  }
  throw ConfigError("unhandled generator kind");
}

}  // namespace stegosec
