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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stegosec/bitstring.hpp"

namespace stegosec {

enum class ContainerKind { raw, graymap };

std::string_view to_string(ContainerKind kind);
ContainerKind parse_container_kind(std::string_view name);

// Binary P5 image with maxval 255. The header bytes are kept verbatim so a
// loaded file is stored back bit-exactly.
struct GraymapInfo {
  std::size_t width = 0;
  std::size_t height = 0;
  std::string header;

  friend bool operator==(const GraymapInfo&, const GraymapInfo&) = default;
};

// An immutable cover or stego content: a payload plus its container metadata.
class Content {
 public:
  // Throws StructuralError on an empty payload.
  static Content raw(std::vector<std::uint8_t> payload);
  // Canonical header "P5\n<w> <h>\n255\n"; payload must hold width*height bytes.
  static Content graymap(std::size_t width, std::size_t height,
                         std::vector<std::uint8_t> payload);

  ContainerKind kind() const noexcept { return kind_; }
  const std::optional<GraymapInfo>& graymap_info() const noexcept {
    return graymap_;
  }
  std::span<const std::uint8_t> payload() const noexcept { return payload_; }
  std::size_t size() const noexcept { return payload_.size(); }

  // Same metadata, different payload of the same length.
  Content with_payload(std::vector<std::uint8_t> payload) const;

  friend bool operator==(const Content&, const Content&) = default;

 private:
  friend Content load_content(std::span<const std::uint8_t>, ContainerKind);
  friend class PlaneWriter;

  Content() = default;

  ContainerKind kind_ = ContainerKind::raw;
  std::optional<GraymapInfo> graymap_;
  std::vector<std::uint8_t> payload_;
};

struct BitPosition {
  std::size_t byte_index = 0;
  std::uint8_t bit_index = 0;  // 0 = least significant

  friend bool operator==(const BitPosition&, const BitPosition&) = default;
};

enum class PositionPolicy { lsb_per_byte };

std::string_view to_string(PositionPolicy policy);
PositionPolicy parse_position_policy(std::string_view name);

// Ordered plane positions; position t carries plane bit t.
class PositionMap {
 public:
  PositionMap() = default;
  // Throws StructuralError on bit_index > 7 or duplicate positions.
  explicit PositionMap(std::vector<BitPosition> positions);

  std::size_t size() const noexcept { return positions_.size(); }
  std::span<const BitPosition> positions() const noexcept {
    return positions_;
  }
  const BitPosition& operator[](std::size_t t) const { return positions_[t]; }

  // Smallest payload length that holds every position.
  std::size_t required_payload() const noexcept { return required_payload_; }

  // Throws StructuralError if any position lies outside `content`.
  void check_fits(const Content& content) const;

  // Per-byte mask of plane bits over a payload of `payload_size` bytes.
  std::vector<std::uint8_t> byte_mask(std::size_t payload_size) const;

  friend bool operator==(const PositionMap& a, const PositionMap& b) {
    return a.positions_ == b.positions_;
  }

 private:
  std::vector<BitPosition> positions_;
  std::size_t required_payload_ = 0;
};

// Throws CapacityError when n exceeds what the policy can place in content.
PositionMap designate_positions(const Content& content, std::size_t n,
                                PositionPolicy policy);

NBitString read_plane(const Content& content, const PositionMap& pmap);
// read_plane into an existing string, reusing its storage.
void read_plane_into(const Content& content, const PositionMap& pmap,
                     NBitString& out);
Content write_plane(const Content& content, const PositionMap& pmap,
                    const NBitString& plane);

// Reuses a scratch Content's buffer across repeated plane writes. Used by the
// enumeration kernels where allocating a fresh Content per sample dominates.
class PlaneWriter {
 public:
  explicit PlaneWriter(const PositionMap& pmap) : pmap_(&pmap) {}

  // out = write_plane(base, pmap, plane), reusing out's storage.
  void write(const Content& base, const NBitString& plane, Content& out) const;

 private:
  const PositionMap* pmap_;
};

// Raw contents accept any non-empty byte sequence. Graymaps must be binary P5
// with maxval 255 and no comment lines. Throws ParseError with the offending
// byte offset.
Content load_content(std::span<const std::uint8_t> bytes, ContainerKind kind);
Content load_content(std::istream& in, ContainerKind kind);
Content load_content(const std::filesystem::path& path, ContainerKind kind);

std::vector<std::uint8_t> serialize_content(const Content& content);
void store_content(const Content& content, std::ostream& out);
void store_content(const Content& content, const std::filesystem::path& path);

// ".pgm" selects graymap, anything else raw.
ContainerKind kind_for_path(const std::filesystem::path& path);

}  // namespace stegosec
