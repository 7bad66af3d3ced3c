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

#include "stegosec/manifest.hpp"

#include <fstream>

#include "json.hpp"
#include "stegosec/errors.hpp"

namespace stegosec {

namespace fs = std::filesystem;

FamilyManifest read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("manifest '" + path.string() + "': " + e.what(), e.byte);
  }
  FamilyManifest m;
  try {
    m.n_bits = j.at("n_bits").get<std::size_t>();
    m.policy = parse_position_policy(j.value("policy", std::string("lsb-per-byte")));
    if (j.contains("kind")) {
      m.kind = parse_container_kind(j.at("kind").get<std::string>());
    }
    if (j.contains("t1")) m.t1 = j.at("t1").get<Cost>();
    const fs::path dir = path.parent_path();
    for (const auto& base : j.at("bases")) {
      m.bases.push_back(dir / base.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("manifest '" + path.string() + "' is malformed: " + e.what());
  }
  if (m.bases.empty()) throw Error("manifest '" + path.string() + "' lists no bases");
  return m;
}

void write_manifest(const FamilyManifest& manifest, const fs::path& path) {
  nlohmann::ordered_json j;
  j["n_bits"] = manifest.n_bits;
  j["policy"] = to_string(manifest.policy);
  if (manifest.kind) j["kind"] = to_string(*manifest.kind);
  if (manifest.t1) j["t1"] = *manifest.t1;
  const fs::path dir = path.parent_path();
  auto& bases = j["bases"] = nlohmann::ordered_json::array();
  for (const fs::path& base : manifest.bases) {
    const fs::path rel = dir.empty() ? base : base.lexically_relative(dir);
    bases.push_back(rel.generic_string());
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write manifest '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

namespace {

std::vector<Content> load_bases(const std::vector<fs::path>& paths,
                                std::optional<ContainerKind> kind) {
  std::vector<Content> bases;
  bases.reserve(paths.size());
  for (const fs::path& p : paths) {
    try {
      bases.push_back(load_content(p, kind.value_or(kind_for_path(p))));
    } catch (const ParseError& e) {
      throw ParseError("base '" + p.string() + "': " + e.what(), e.offset());
    }
  }
  return bases;
}

}  // namespace

SupportFamily load_family(const fs::path& manifest_path) {
  const FamilyManifest m = read_manifest(manifest_path);
  auto bases = load_bases(m.bases, m.kind);
  PositionMap pmap = designate_positions(bases.front(), m.n_bits, m.policy);
  return SupportFamily(std::move(bases), std::move(pmap), m.t1);
}

SupportFamily init_family(const std::vector<fs::path>& base_paths,
                          std::size_t n_bits, PositionPolicy policy,
                          std::optional<ContainerKind> kind,
                          const fs::path& manifest_path) {
  if (base_paths.empty()) throw UsageError("family-init needs at least one base");
  auto bases = load_bases(base_paths, kind);
  PositionMap pmap = designate_positions(bases.front(), n_bits, policy);
  SupportFamily family(std::move(bases), std::move(pmap));

  const fs::path dir = manifest_path.parent_path();
  const fs::path base_dir = dir / (manifest_path.stem().string() + "_bases");
  fs::create_directories(base_dir);

  FamilyManifest m;
  m.n_bits = n_bits;
  m.policy = policy;
  m.kind = family.base(0).kind();
  m.t1 = family.t1();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const char* ext = m.kind == ContainerKind::graymap ? ".pgm" : ".bin";
    const fs::path out = base_dir / ("base_" + std::to_string(i) + ext);
    store_content(family.base(i), out);
    m.bases.push_back(out);
  }
  write_manifest(m, manifest_path);
  return family;
}

}  // namespace stegosec
