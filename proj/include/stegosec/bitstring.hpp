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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stegosec {

// Fixed-length bit vector used for messages, pads, plane values and keys.
//
// Bit t has weight 2^t in the canonical integer value. The length is fixed at
// construction; bits above the length are kept zero in the backing words so
// equality and hashing can work word by word.
//
// Hex form: ceil(length / 8) bytes, least significant byte first, each byte
// written as two lowercase hex digits. Bit t lives in byte t / 8 at weight
// 2^(t % 8). A 4-bit value 0b1011 is "0b"; a 16-bit value 0x1234 is "3412".
class NBitString {
 public:
  NBitString() = default;
  explicit NBitString(std::size_t length);

  // Throws StructuralError if value does not fit in `length` bits.
  static NBitString from_value(std::size_t length, std::uint64_t value);
  // Throws UsageError on bad digits, wrong digit count or nonzero padding bits.
  static NBitString from_hex(std::string_view hex, std::size_t length);
  // Takes the first `length` bits of `bytes` in the hex bit order above.
  static NBitString from_bytes(std::span<const std::uint8_t> bytes,
                               std::size_t length);

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }

  bool test(std::size_t t) const;
  void set(std::size_t t, bool bit);

  // Canonical integer value; only for lengths up to 64.
  std::uint64_t value() const;

  std::string to_hex() const;
  std::vector<std::uint8_t> to_bytes() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }
  // Clears any bits above size() in the last word.
  void clear_padding() noexcept;

  NBitString& operator^=(const NBitString& other);
  friend NBitString operator^(NBitString lhs, const NBitString& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  // *this = a ^ b without reallocating when the length already matches.
  void assign_xor(const NBitString& a, const NBitString& b);

  friend bool operator==(const NBitString&, const NBitString&) = default;

  std::size_t hash() const noexcept;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace stegosec

template <>
struct std::hash<stegosec::NBitString> {
  std::size_t operator()(const stegosec::NBitString& s) const noexcept {
    return s.hash();
  }
};
