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

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "stegosec/chunking.hpp"
#include "stegosec/errors.hpp"
#include "stegosec/manifest.hpp"
#include "stegosec/synthetic.hpp"

using namespace stegosec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("stegosec-unit-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("chunking splits bits in order and pads the last block") {
  const std::vector<std::uint8_t> bytes{0b10110101, 0b00000011};
  const auto blocks = chunk_message(bytes, 10, 4);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].value() == 0b0101);
  CHECK(blocks[1].value() == 0b1011);
  CHECK(blocks[2].value() == 0b0011);
  CHECK(join_chunks(blocks, 10) == bytes);
  CHECK(chunk_message({}, 0, 4).size() == 1);
  CHECK_THROWS_AS(chunk_message(bytes, 17, 4), StructuralError);
  CHECK_THROWS_AS(chunk_message(bytes, 8, 0), StructuralError);
  CHECK_THROWS_AS(join_chunks(blocks, 13), StructuralError);
}

TEST_CASE("property: chunk then join is the identity") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t len = rng() % 300;
    const std::size_t n = 1 + rng() % 70;
    std::vector<std::uint8_t> bytes((len + 7) / 8);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
    if (len % 8 != 0) bytes.back() &= static_cast<std::uint8_t>((1U << (len % 8)) - 1);
    const auto blocks = chunk_message(bytes, len, n);
    CHECK(blocks.size() == std::max<std::size_t>(1, (len + n - 1) / n));
    CHECK(join_chunks(blocks, len) == bytes);
  }
}

TEST_CASE("manifest round trip with relative base paths") {
  TempDir dir;
  FamilyManifest m;
  m.n_bits = 12;
  m.kind = ContainerKind::graymap;
  m.t1 = 40;
  m.bases = {dir.path / "sub" / "a.pgm", dir.path / "b.pgm"};
  write_manifest(m, dir.path / "family.json");
  std::ifstream in(dir.path / "family.json");
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text.find("\"sub/a.pgm\"") != std::string::npos);
  const FamilyManifest back = read_manifest(dir.path / "family.json");
  CHECK(back.n_bits == 12);
  CHECK(back.kind == ContainerKind::graymap);
  CHECK(back.t1 == Cost{40});
  CHECK(back.bases == m.bases);
}

TEST_CASE("malformed manifests") {
  TempDir dir;
  const fs::path p = dir.path / "m.json";
  std::ofstream(p) << "{\"n_bits\": 4,";
  CHECK_THROWS_AS(read_manifest(p), ParseError);
  std::ofstream(p) << "{\"n_bits\": 4, \"bases\": []}";
  CHECK_THROWS_AS(read_manifest(p), Error);
  std::ofstream(p) << "{\"bases\": [\"x\"]}";
  CHECK_THROWS_AS(read_manifest(p), Error);
  std::ofstream(p) << "{\"n_bits\": 4, \"policy\": \"msb\", \"bases\": [\"x\"]}";
  CHECK_THROWS_AS(read_manifest(p), Error);
  CHECK_THROWS_AS(read_manifest(dir.path / "missing.json"), Error);
}

TEST_CASE("init_family stores normalized bases that load back identically") {
  TempDir dir;
  std::vector<fs::path> inputs;
  const auto bases = synthetic_bases(3, 32, 5);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    inputs.push_back(dir.path / ("in" + std::to_string(i) + ".bin"));
    store_content(bases[i], inputs.back());
  }
  const fs::path manifest = dir.path / "fam.json";
  const SupportFamily made =
      init_family(inputs, 20, PositionPolicy::lsb_per_byte, std::nullopt, manifest);
  CHECK(fs::exists(dir.path / "fam_bases" / "base_2.bin"));
  const SupportFamily loaded = load_family(manifest);
  CHECK(loaded.bases() == made.bases());
  CHECK(loaded.pmap() == made.pmap());
  CHECK(loaded.t1() == made.t1());

  CHECK_THROWS_AS(init_family(inputs, 33, PositionPolicy::lsb_per_byte, std::nullopt,
                              dir.path / "big.json"),
                  CapacityError);
  store_content(bases[0], dir.path / "dup.bin");
  CHECK_THROWS_AS(init_family({inputs[0], dir.path / "dup.bin"}, 8,
                              PositionPolicy::lsb_per_byte, std::nullopt,
                              dir.path / "dup.json"),
                  FamilyCollisionError);
  CHECK_THROWS_AS(init_family({}, 8, PositionPolicy::lsb_per_byte, std::nullopt,
                              dir.path / "none.json"),
                  UsageError);
}

TEST_CASE("graymap bases keep their kind through the manifest") {
  TempDir dir;
  std::vector<fs::path> inputs;
  for (int i = 0; i < 2; ++i) {
    std::vector<std::uint8_t> px(12);
    for (std::size_t b = 0; b < px.size(); ++b) px[b] = static_cast<std::uint8_t>(b * 10 + i * 2);
    inputs.push_back(dir.path / ("g" + std::to_string(i) + ".pgm"));
    store_content(Content::graymap(4, 3, px), inputs.back());
  }
  init_family(inputs, 8, PositionPolicy::lsb_per_byte, std::nullopt, dir.path / "g.json");
  const SupportFamily fam = load_family(dir.path / "g.json");
  CHECK(fam.base(1).kind() == ContainerKind::graymap);
  CHECK(fam.base(1).graymap_info()->width == 4);
}
