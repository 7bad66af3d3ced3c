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

#include "stegosec/stegosystem.hpp"

#include <string>

#include "stegosec/errors.hpp"

namespace stegosec {

SupportFamily::SupportFamily(std::vector<Content> bases, PositionMap pmap,
                             std::optional<Cost> t1)
    : pmap_(std::move(pmap)) {
  if (bases.empty()) throw StructuralError("support family needs at least one base");
  const Content& first = bases.front();
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].kind() != first.kind()) {
      throw StructuralError("base " + std::to_string(i) +
                            " has a different container kind than base 0");
    }
    if (bases[i].size() != first.size()) {
      throw StructuralError("base " + std::to_string(i) + " has " +
                            std::to_string(bases[i].size()) +
                            " payload bytes, base 0 has " +
                            std::to_string(first.size()));
    }
  }
  pmap_.check_fits(first);

  keep_mask_ = pmap_.byte_mask(first.size());
  for (std::uint8_t& b : keep_mask_) b = static_cast<std::uint8_t>(~b);

  const NBitString zero(pmap_.size());
  bases_.reserve(bases.size());
  for (const Content& b : bases) bases_.push_back(write_plane(b, pmap_, zero));

  for (std::size_t a = 0; a < bases_.size(); ++a) {
    for (std::size_t b = a + 1; b < bases_.size(); ++b) {
      if (bases_[a] == bases_[b]) throw FamilyCollisionError(a, b);
    }
  }
  t1_ = t1.value_or(first.size());
}

const Content& SupportFamily::base(std::size_t i) const {
  if (i >= bases_.size()) {
    throw StructuralError("base index " + std::to_string(i) +
                          " out of range for a family of " +
                          std::to_string(bases_.size()));
  }
  return bases_[i];
}

Content SupportFamily::member(std::size_t i, const NBitString& plane) const {
  return write_plane(base(i), pmap_, plane);
}

std::optional<std::size_t> SupportFamily::find_base(const Content& c) const {
  const Content& first = bases_.front();
  if (c.kind() != first.kind() || c.size() != first.size()) return std::nullopt;
  const auto payload = c.payload();
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    const auto base = bases_[i].payload();
    bool match = bases_[i].graymap_info() == c.graymap_info();
    for (std::size_t b = 0; match && b < payload.size(); ++b) {
      match = (payload[b] & keep_mask_[b]) == base[b];
    }
    if (match) return i;
  }
  return std::nullopt;
}

SupportIndex SupportFamily::index_of(const Content& c) const {
  const auto i = find_base(c);
  if (!i) throw NotInFamilyError("content does not match any base outside the plane");
  return {*i, read_plane(c, pmap_)};
}

Stegosystem::Stegosystem(SupportFamily family, GeneratorPtr generator)
    : family_(std::move(family)), generator_(std::move(generator)) {
  if (!generator_) throw ConfigError("stegosystem needs a generator");
  if (generator_->out_len() != family_.n_bits()) {
    throw ConfigError("generator produces " +
                      std::to_string(generator_->out_len()) +
                      " bits but the plane holds " +
                      std::to_string(family_.n_bits()));
  }
}

void Stegosystem::check_message(const NBitString& message) const {
  if (message.size() != n_bits()) {
    throw StructuralError("message has " + std::to_string(message.size()) +
                          " bits, plane holds " + std::to_string(n_bits()));
  }
}

Content Stegosystem::embed(std::size_t i, const NBitString& message,
                           const NBitString& key) const {
  check_message(message);
  return family_.member(i, message ^ generator_->expand(key));
}

NBitString Stegosystem::extract(const Content& c, const NBitString& key) const {
  if (c.size() != family_.base(0).size()) {
    throw StructuralError("content has " + std::to_string(c.size()) +
                          " payload bytes, family bases have " +
                          std::to_string(family_.base(0).size()));
  }
  return read_plane(c, family_.pmap()) ^ generator_->expand(key);
}

NBitString Stegosystem::inv(const NBitString& key) const {
  if (key.size() != key_len()) {
    throw StructuralError("key has " + std::to_string(key.size()) +
                          " bits, stegosystem expects " +
                          std::to_string(key_len()));
  }
  return key;
}

Cost Stegosystem::embed_cost() const noexcept {
  return family_.t1() + n_bits() + generator_->time_budget();
}

}  // namespace stegosec
