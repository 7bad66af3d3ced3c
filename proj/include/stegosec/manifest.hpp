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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stegosec/container.hpp"
#include "stegosec/cost.hpp"
#include "stegosec/stegosystem.hpp"

namespace stegosec {

// On-disk description of a support family:
//
//   {"n_bits": 4, "policy": "lsb-per-byte", "kind": "raw", "t1": 8,
//    "bases": ["family_bases/base_0.bin", ...]}
//
// Base paths are relative to the manifest's directory. "kind" and "t1" are
// optional; kind falls back to the base file extension.
struct FamilyManifest {
  std::size_t n_bits = 0;
  PositionPolicy policy = PositionPolicy::lsb_per_byte;
  std::optional<ContainerKind> kind;
  std::optional<Cost> t1;
  std::vector<std::filesystem::path> bases;
};

FamilyManifest read_manifest(const std::filesystem::path& path);
void write_manifest(const FamilyManifest& manifest,
                    const std::filesystem::path& path);

// Loads every base, designates the plane on base 0 and builds the family.
SupportFamily load_family(const std::filesystem::path& manifest_path);

// Builds a family from base files, stores the plane-normalized bases in
// "<manifest stem>_bases/" next to the manifest, and writes the manifest.
// Throws FamilyCollisionError, CapacityError or ParseError.
SupportFamily init_family(const std::vector<std::filesystem::path>& base_paths,
                          std::size_t n_bits, PositionPolicy policy,
                          std::optional<ContainerKind> kind,
                          const std::filesystem::path& manifest_path);

}  // namespace stegosec
