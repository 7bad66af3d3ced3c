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

#include "stegosec/bitstring.hpp"

#include "stegosec/errors.hpp"

namespace stegosec {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

NBitString::NBitString(std::size_t length)
    : length_(length), words_(word_count(length), 0) {}

NBitString NBitString::from_value(std::size_t length, std::uint64_t value) {
  if (length < 64 && (value >> length) != 0) {
    throw StructuralError("value " + std::to_string(value) +
                          " does not fit in " + std::to_string(length) +
                          " bits");
  }
  NBitString out(length);
  if (!out.words_.empty()) out.words_[0] = value;
  return out;
}

NBitString NBitString::from_bytes(std::span<const std::uint8_t> bytes,
                                  std::size_t length) {
  if (bytes.size() * 8 < length) {
    throw StructuralError("need " + std::to_string(length) + " bits but got " +
                          std::to_string(bytes.size()) + " bytes");
  }
  NBitString out(length);
  for (std::size_t b = 0; b < (length + 7) / 8; ++b) {
    out.words_[b / 8] |= std::uint64_t{bytes[b]} << (8 * (b % 8));
  }
  out.clear_padding();
  return out;
}

NBitString NBitString::from_hex(std::string_view hex, std::size_t length) {
  const std::size_t nbytes = (length + 7) / 8;
  if (hex.size() != 2 * nbytes) {
    throw UsageError("hex string '" + std::string(hex) + "' has " +
                     std::to_string(hex.size()) + " digits, expected " +
                     std::to_string(2 * nbytes) + " for " +
                     std::to_string(length) + " bits");
  }
  std::vector<std::uint8_t> bytes(nbytes);
  for (std::size_t b = 0; b < nbytes; ++b) {
    const int hi = hex_digit(hex[2 * b]);
    const int lo = hex_digit(hex[2 * b + 1]);
    if (hi < 0 || lo < 0) {
      throw UsageError("invalid hex digit in '" + std::string(hex) + "'");
    }
    bytes[b] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  if (length % 8 != 0 && (bytes.back() >> (length % 8)) != 0) {
    throw UsageError("hex string '" + std::string(hex) +
                     "' sets bits beyond length " + std::to_string(length));
  }
  return from_bytes(bytes, length);
}

bool NBitString::test(std::size_t t) const {
  if (t >= length_) {
    throw StructuralError("bit " + std::to_string(t) + " out of range for " +
                          std::to_string(length_) + "-bit string");
  }
  return (words_[t / 64] >> (t % 64)) & 1U;
}

void NBitString::set(std::size_t t, bool bit) {
  if (t >= length_) {
    throw StructuralError("bit " + std::to_string(t) + " out of range for " +
                          std::to_string(length_) + "-bit string");
  }
  const std::uint64_t mask = std::uint64_t{1} << (t % 64);
  if (bit) {
    words_[t / 64] |= mask;
  } else {
    words_[t / 64] &= ~mask;
  }
}

std::uint64_t NBitString::value() const {
  if (length_ > 64) {
    throw StructuralError("integer value requested for " +
                          std::to_string(length_) + "-bit string");
  }
  return words_.empty() ? 0 : words_[0];
}

std::vector<std::uint8_t> NBitString::to_bytes() const {
  std::vector<std::uint8_t> bytes((length_ + 7) / 8);
  for (std::size_t b = 0; b < bytes.size(); ++b) {
    bytes[b] = static_cast<std::uint8_t>(words_[b / 8] >> (8 * (b % 8)));
  }
  return bytes;
}

std::string NBitString::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::uint8_t byte : to_bytes()) {
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xF]);
  }
  return out;
}

void NBitString::clear_padding() noexcept {
  if (length_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (length_ % 64)) - 1;
  }
}

NBitString& NBitString::operator^=(const NBitString& other) {
  if (other.length_ != length_) {
    throw StructuralError("xor of " + std::to_string(length_) + "-bit and " +
                          std::to_string(other.length_) + "-bit strings");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

void NBitString::assign_xor(const NBitString& a, const NBitString& b) {
  if (a.length_ != b.length_) {
    throw StructuralError("xor of " + std::to_string(a.length_) + "-bit and " +
                          std::to_string(b.length_) + "-bit strings");
  }
  length_ = a.length_;
  words_.resize(a.words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] = a.words_[w] ^ b.words_[w];
  }
}

std::size_t NBitString::hash() const noexcept {
  // FNV-1a over the words, seeded with the length.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ length_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace stegosec
