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
#include <vector>

#include "stegosec/container.hpp"

namespace stegosec {

// Deterministic raw covers for games run without a manifest: a sawtooth ramp
// offset per base plus bounded hash noise, so the byte histogram is spread but
// not flat. Bases differ outside the least significant bit for any r <= 256.
std::vector<Content> synthetic_bases(std::size_t r, std::size_t payload_bytes,
                                     std::uint64_t seed = 0);

}  // namespace stegosec
