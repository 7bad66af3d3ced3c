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
#include <span>
#include <vector>

#include "stegosec/bitstring.hpp"

namespace stegosec {

// Splits the first bit_length bits of `bytes` (bit t of the message is bit
// t % 8 of byte t / 8) into ceil(bit_length / n) blocks of n bits. The last
// block is zero-padded. An empty message still yields one block.
std::vector<NBitString> chunk_message(std::span<const std::uint8_t> bytes,
                                      std::size_t bit_length, std::size_t n);

// Inverse of chunk_message: concatenates the blocks, keeps bit_length bits and
// returns them as ceil(bit_length / 8) bytes.
std::vector<std::uint8_t> join_chunks(const std::vector<NBitString>& blocks,
                                      std::size_t bit_length);

}  // namespace stegosec
