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

#include "stegosec/chunking.hpp"

#include <string>

#include "stegosec/errors.hpp"

namespace stegosec {

std::vector<NBitString> chunk_message(std::span<const std::uint8_t> bytes,
                                      std::size_t bit_length, std::size_t n) {
  if (n == 0) throw StructuralError("chunk size must be positive");
  if (bit_length > bytes.size() * 8) {
    throw StructuralError("message of " + std::to_string(bytes.size()) +
                          " bytes cannot hold " + std::to_string(bit_length) +
                          " bits");
  }
  const std::size_t blocks = bit_length == 0 ? 1 : (bit_length + n - 1) / n;
  std::vector<NBitString> out(blocks, NBitString(n));
  for (std::size_t t = 0; t < bit_length; ++t) {
    if ((bytes[t / 8] >> (t % 8)) & 1U) out[t / n].set(t % n, true);
  }
  return out;
}

std::vector<std::uint8_t> join_chunks(const std::vector<NBitString>& blocks,
                                      std::size_t bit_length) {
  std::size_t available = 0;
  for (const NBitString& b : blocks) available += b.size();
  if (bit_length > available) {
    throw StructuralError("chunks hold " + std::to_string(available) +
                          " bits, message needs " + std::to_string(bit_length));
  }
  std::vector<std::uint8_t> out((bit_length + 7) / 8, 0);
  std::size_t t = 0;
  for (const NBitString& b : blocks) {
    for (std::size_t q = 0; q < b.size() && t < bit_length; ++q, ++t) {
      if (b.test(q)) out[t / 8] |= static_cast<std::uint8_t>(1U << (t % 8));
    }
  }
  return out;
}

}  // namespace stegosec
