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

#include "stegosec/synthetic.hpp"

#include "stegosec/errors.hpp"
#include "stegosec/seeding.hpp"

namespace stegosec {

std::vector<Content> synthetic_bases(std::size_t r, std::size_t payload_bytes,
                                     std::uint64_t seed) {
  if (r == 0 || payload_bytes == 0) {
    throw StructuralError("synthetic family needs at least one non-empty base");
  }
  std::vector<Content> bases;
  bases.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::uint8_t> payload(payload_bytes);
    for (std::size_t b = 0; b < payload_bytes; ++b) {
      const std::uint64_t noise = mix64(seed ^ (std::uint64_t{i} << 40) ^ b) % 24;
      payload[b] = static_cast<std::uint8_t>(40 + (b * 3) % 160 + noise);
    }
    // Byte 0 carries the base index in its upper seven bits.
    payload[0] = static_cast<std::uint8_t>((i & 0x7F) << 1);
    if (payload_bytes > 1) {
      payload[1] = static_cast<std::uint8_t>(((i >> 7) & 0x1) << 1 | 0x80);
    }
    bases.push_back(Content::raw(std::move(payload)));
  }
  return bases;
}

}  // namespace stegosec
