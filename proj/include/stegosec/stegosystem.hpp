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
#include <optional>
#include <vector>

#include "stegosec/bitstring.hpp"
#include "stegosec/container.hpp"
#include "stegosec/cost.hpp"
#include "stegosec/generator.hpp"

namespace stegosec {

struct SupportIndex {
  std::size_t base = 0;
  NBitString plane;

  friend bool operator==(const SupportIndex&, const SupportIndex&) = default;
};

// r base contents sharing one N-bit plane. Member (i, j) is base i with its
// plane set to j. Bases are stored with the plane cleared, so members are a
// pure function of (i, j) whatever the original plane bits were.
class SupportFamily {
 public:
  // Throws StructuralError for an empty family, mixed container kinds or
  // payload lengths, or a position map that does not fit; FamilyCollisionError
  // when two bases agree outside the plane. `t1` is the declared cost of
  // computing one member; it defaults to the payload length.
  SupportFamily(std::vector<Content> bases, PositionMap pmap,
                std::optional<Cost> t1 = std::nullopt);

  std::size_t size() const noexcept { return bases_.size(); }
  std::size_t n_bits() const noexcept { return pmap_.size(); }
  const PositionMap& pmap() const noexcept { return pmap_; }
  const Content& base(std::size_t i) const;
  const std::vector<Content>& bases() const noexcept { return bases_; }
  Cost t1() const noexcept { return t1_; }

  Content member(std::size_t i, const NBitString& plane) const;

  // Throws NotInFamilyError when no base matches `c` outside the plane.
  SupportIndex index_of(const Content& c) const;
  // The base matching `c` outside the plane, if any.
  std::optional<std::size_t> find_base(const Content& c) const;

 private:
  std::vector<Content> bases_;
  PositionMap pmap_;
  std::vector<std::uint8_t> keep_mask_;  // complement of the plane, per byte
  Cost t1_;
};

// Symmetric stegosystem whose embedding overwrites the plane of base i with
// m xor G(k) and whose extraction reads the plane back and xors the pad off.
class Stegosystem {
 public:
  // Throws ConfigError when the generator output length differs from N.
  Stegosystem(SupportFamily family, GeneratorPtr generator);

  const SupportFamily& family() const noexcept { return family_; }
  const Generator& generator() const noexcept { return *generator_; }
  const GeneratorPtr& generator_ptr() const noexcept { return generator_; }
  std::size_t n_bits() const noexcept { return family_.n_bits(); }
  std::size_t key_len() const noexcept { return generator_->key_len(); }

  Content embed(std::size_t i, const NBitString& message,
                const NBitString& key) const;
  NBitString extract(const Content& c, const NBitString& key) const;
  // Extraction key for an embedding key; the identity.
  NBitString inv(const NBitString& key) const;

  // T1 + N + cost(G).
  Cost embed_cost() const noexcept;

 private:
  void check_message(const NBitString& message) const;

  SupportFamily family_;
  GeneratorPtr generator_;
};

}  // namespace stegosec
