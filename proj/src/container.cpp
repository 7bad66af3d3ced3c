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

#include "stegosec/container.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <unordered_set>

#include "stegosec/errors.hpp"

namespace stegosec {

std::string_view to_string(ContainerKind kind) {
  return kind == ContainerKind::raw ? "raw" : "graymap";
}

ContainerKind parse_container_kind(std::string_view name) {
  if (name == "raw") return ContainerKind::raw;
  if (name == "graymap" || name == "pgm") return ContainerKind::graymap;
  throw UsageError("unknown container kind '" + std::string(name) + "'");
}

Content Content::raw(std::vector<std::uint8_t> payload) {
  if (payload.empty()) throw StructuralError("content payload is empty");
  Content c;
  c.payload_ = std::move(payload);
  return c;
}

Content Content::graymap(std::size_t width, std::size_t height,
                         std::vector<std::uint8_t> payload) {
  if (width == 0 || height == 0) {
    throw StructuralError("graymap dimensions must be positive");
  }
  if (payload.size() != width * height) {
    throw StructuralError("graymap payload has " +
                          std::to_string(payload.size()) + " bytes, expected " +
                          std::to_string(width * height));
  }
  Content c;
  c.kind_ = ContainerKind::graymap;
  c.graymap_ = GraymapInfo{width, height,
                           "P5\n" + std::to_string(width) + " " +
                               std::to_string(height) + "\n255\n"};
  c.payload_ = std::move(payload);
  return c;
}

Content Content::with_payload(std::vector<std::uint8_t> payload) const {
  if (payload.size() != payload_.size()) {
    throw StructuralError("replacement payload has " +
                          std::to_string(payload.size()) + " bytes, expected " +
                          std::to_string(payload_.size()));
  }
  Content c = *this;
  c.payload_ = std::move(payload);
  return c;
}

std::string_view to_string(PositionPolicy policy) {
  switch (policy) {
    case PositionPolicy::lsb_per_byte:
      return "lsb-per-byte";
  }
  return "?";
}

PositionPolicy parse_position_policy(std::string_view name) {
  if (name == "lsb-per-byte") return PositionPolicy::lsb_per_byte;
  throw UsageError("unknown position policy '" + std::string(name) + "'");
}

PositionMap::PositionMap(std::vector<BitPosition> positions)
    : positions_(std::move(positions)) {
  std::unordered_set<std::size_t> seen;
  seen.reserve(positions_.size());
  for (const BitPosition& p : positions_) {
    if (p.bit_index > 7) {
      throw StructuralError("bit index " + std::to_string(p.bit_index) +
                            " outside 0..7");
    }
    if (!seen.insert(p.byte_index * 8 + p.bit_index).second) {
      throw StructuralError("duplicate plane position (" +
                            std::to_string(p.byte_index) + ", " +
                            std::to_string(p.bit_index) + ")");
    }
    required_payload_ = std::max(required_payload_, p.byte_index + 1);
  }
}

void PositionMap::check_fits(const Content& content) const {
  if (required_payload_ > content.size()) {
    throw StructuralError("plane position at byte " +
                          std::to_string(required_payload_ - 1) +
                          " lies outside a " + std::to_string(content.size()) +
                          "-byte payload");
  }
}

std::vector<std::uint8_t> PositionMap::byte_mask(
    std::size_t payload_size) const {
  if (required_payload_ > payload_size) {
    throw StructuralError("position map does not fit a " +
                          std::to_string(payload_size) + "-byte payload");
  }
  std::vector<std::uint8_t> mask(payload_size, 0);
  for (const BitPosition& p : positions_) {
    mask[p.byte_index] |= static_cast<std::uint8_t>(1U << p.bit_index);
  }
  return mask;
}

PositionMap designate_positions(const Content& content, std::size_t n,
                                PositionPolicy policy) {
  switch (policy) {
    case PositionPolicy::lsb_per_byte: {
      if (n > content.size()) throw CapacityError(n, content.size());
      std::vector<BitPosition> positions(n);
      for (std::size_t t = 0; t < n; ++t) positions[t] = {t, 0};
      return PositionMap(std::move(positions));
    }
  }
  throw StructuralError("unhandled position policy");
}

NBitString read_plane(const Content& content, const PositionMap& pmap) {
  NBitString out(pmap.size());
  read_plane_into(content, pmap, out);
  return out;
}

void read_plane_into(const Content& content, const PositionMap& pmap,
                     NBitString& out) {
  pmap.check_fits(content);
  const auto payload = content.payload();
  if (out.size() != pmap.size()) out = NBitString(pmap.size());
  auto words = out.mutable_words();
  for (std::uint64_t& w : words) w = 0;
  for (std::size_t t = 0; t < pmap.size(); ++t) {
    const BitPosition& p = pmap[t];
    const std::uint64_t bit = (payload[p.byte_index] >> p.bit_index) & 1U;
    words[t / 64] |= bit << (t % 64);
  }
}

void PlaneWriter::write(const Content& base, const NBitString& plane,
                        Content& out) const {
  const PositionMap& pmap = *pmap_;
  if (plane.size() != pmap.size()) {
    throw StructuralError("plane value has " + std::to_string(plane.size()) +
                          " bits but the position map has " +
                          std::to_string(pmap.size()));
  }
  pmap.check_fits(base);
  out.kind_ = base.kind_;
  out.graymap_ = base.graymap_;
  out.payload_.assign(base.payload_.begin(), base.payload_.end());
  const auto words = plane.words();
  for (std::size_t t = 0; t < pmap.size(); ++t) {
    const BitPosition& p = pmap[t];
    const auto bit = static_cast<std::uint8_t>((words[t / 64] >> (t % 64)) & 1U);
    std::uint8_t& byte = out.payload_[p.byte_index];
    byte = static_cast<std::uint8_t>((byte & ~(1U << p.bit_index)) |
                                     (bit << p.bit_index));
  }
}

Content write_plane(const Content& content, const PositionMap& pmap,
                    const NBitString& plane) {
  Content out = content;
  PlaneWriter(pmap).write(content, plane, out);
  return out;
}

namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class HeaderReader {
 public:
  HeaderReader(std::span<const std::uint8_t> bytes, std::size_t pos)
      : bytes_(bytes), pos_(pos) {}

  std::size_t offset() const { return pos_; }

  void skip_space() {
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && is_space(bytes_[pos_])) ++pos_;
    if (pos_ == start) throw ParseError("expected whitespace", pos_);
    if (pos_ < bytes_.size() && bytes_[pos_] == '#') {
      throw ParseError("comment lines are not supported", pos_);
    }
  }

  std::size_t number(const char* what) {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > (std::size_t{1} << 32)) {
        throw ParseError(std::string(what) + " is too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return value;
  }

  // Exactly one whitespace byte separates the header from the payload.
  void single_space() {
    if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
      throw ParseError("expected a single whitespace byte after maxval", pos_);
    }
    ++pos_;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_;
};

}  // namespace

Content load_content(std::span<const std::uint8_t> bytes, ContainerKind kind) {
  if (kind == ContainerKind::raw) {
    if (bytes.empty()) throw ParseError("raw content is empty", 0);
    return Content::raw({bytes.begin(), bytes.end()});
  }

  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw ParseError("missing P5 magic", 0);
  }
  HeaderReader reader(bytes, 2);
  reader.skip_space();
  const std::size_t width = reader.number("width");
  reader.skip_space();
  const std::size_t height = reader.number("height");
  reader.skip_space();
  const std::size_t maxval_offset = reader.offset();
  const std::size_t maxval = reader.number("maxval");
  if (maxval != 255) {
    throw ParseError("unsupported maxval " + std::to_string(maxval) +
                         " (only 255 is accepted)",
                     maxval_offset);
  }
  reader.single_space();
  if (width == 0 || height == 0) {
    throw ParseError("graymap dimensions must be positive", 2);
  }

  const std::size_t expected = width * height;
  const std::size_t data_start = reader.offset();
  const std::size_t available = bytes.size() - data_start;
  if (available < expected) {
    throw ParseError("truncated payload: " + std::to_string(available) +
                         " of " + std::to_string(expected) + " bytes",
                     bytes.size());
  }
  if (available > expected) {
    throw ParseError("trailing data after payload", data_start + expected);
  }

  Content c;
  c.kind_ = ContainerKind::graymap;
  c.graymap_ = GraymapInfo{
      width, height, std::string(bytes.begin(), bytes.begin() + data_start)};
  c.payload_.assign(bytes.begin() + data_start, bytes.end());
  return c;
}

Content load_content(std::istream& in, ContainerKind kind) {
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  return load_content(std::span<const std::uint8_t>(bytes), kind);
}

Content load_content(const std::filesystem::path& path, ContainerKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return load_content(in, kind);
}

std::vector<std::uint8_t> serialize_content(const Content& content) {
  std::vector<std::uint8_t> out;
  if (const auto& info = content.graymap_info()) {
    out.assign(info->header.begin(), info->header.end());
  }
  const auto payload = content.payload();
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

void store_content(const Content& content, std::ostream& out) {
  const auto bytes = serialize_content(content);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed to write content");
}

void store_content(const Content& content, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  store_content(content, out);
}

ContainerKind kind_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".pgm" ? ContainerKind::graymap : ContainerKind::raw;
}

}  // namespace stegosec
