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

// stegosec command line: family-init, embed, extract, attack, game, verify.
//
// Exit codes: 0 success, 1 operational failure (I/O, parse, collision,
// capacity), 2 usage error (bad flags, bad hex, length mismatch).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stegosec/analysis.hpp"
#include "stegosec/chunking.hpp"
#include "stegosec/container.hpp"
#include "stegosec/errors.hpp"
#include "stegosec/game.hpp"
#include "stegosec/generator.hpp"
#include "stegosec/manifest.hpp"
#include "stegosec/stegosystem.hpp"
#include "stegosec/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace stegosec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GeneratorArgs {
  std::string kind = "otp";
  std::optional<std::size_t> key_bits;
};

void add_generator_options(CLI::App* cmd, GeneratorArgs& args) {
  cmd->add_option("--gen", args.kind,
                  "Generator: otp, counter, zero, short-cycle")
      ->capture_default_str();
  cmd->add_option("--key-bits", args.key_bits,
                  "Key length in bits (default: N for otp, 128 for counter, "
                  "8 otherwise)");
}

GeneratorPtr build_generator(const GeneratorArgs& args, std::size_t n) {
  const GeneratorKind kind = parse_generator_kind(args.kind);
  std::size_t key_bits = 8;
  if (args.key_bits) {
    key_bits = *args.key_bits;
  } else if (kind == GeneratorKind::one_time_pad) {
    key_bits = n;
  } else if (kind == GeneratorKind::counter_stream) {
    key_bits = 128;
  }
  try {
    return make_generator(kind, key_bits, n);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
}

// Family from --manifest, or a synthetic raw family from --n/--bases.
struct FamilyArgs {
  std::string manifest;
  std::optional<std::size_t> n;
  std::size_t bases = 1;
  std::optional<std::size_t> base_bytes;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--manifest", args.manifest, "Family manifest (JSON)");
  cmd->add_option("--n", args.n, "Plane bits for a synthetic family");
  cmd->add_option("--bases", args.bases, "Bases in a synthetic family")
      ->capture_default_str();
  cmd->add_option("--base-bytes", args.base_bytes,
                  "Payload bytes per synthetic base (default max(N, 64))");
}

SupportFamily build_family(const FamilyArgs& args) {
  if (!args.manifest.empty()) return load_family(args.manifest);
  if (!args.n) throw UsageError("either --manifest or --n is required");
  const std::size_t bytes = args.base_bytes.value_or(std::max<std::size_t>(*args.n, 64));
  auto bases = synthetic_bases(args.bases, bytes);
  PositionMap pmap =
      designate_positions(bases.front(), *args.n, PositionPolicy::lsb_per_byte);
  return SupportFamily(std::move(bases), std::move(pmap));
}

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::uint8_t> bytes_from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw UsageError("hex string has odd length");
  return NBitString::from_hex(hex, hex.size() * 4).to_bytes();
}

std::string hex_of(const std::vector<std::uint8_t>& bytes) {
  return NBitString::from_bytes(bytes, bytes.size() * 8).to_hex();
}

// "stego.pgm", 3 -> "stego.3.pgm"
fs::path chunk_path(const fs::path& out, std::size_t index) {
  fs::path p = out;
  p.replace_filename(out.stem().string() + "." + std::to_string(index) +
                     out.extension().string());
  return p;
}

fs::path sidecar_path(const fs::path& out) {
  fs::path p = out;
  p.replace_filename(out.stem().string() + ".chunks.json");
  return p;
}

void print(const ordered_json& j) { std::cout << j.dump() << '\n'; }

ContainerKind resolve_kind(const std::string& kind, const fs::path& path) {
  return kind == "auto" ? kind_for_path(path) : parse_container_kind(kind);
}

// ---------------------------------------------------------------------------

struct FamilyInitArgs {
  std::vector<std::string> bases;
  std::size_t n = 0;
  std::string policy = "lsb-per-byte";
  std::string kind = "auto";
  std::string out;
};

int run_family_init(const FamilyInitArgs& a) {
  std::optional<ContainerKind> kind;
  if (a.kind != "auto") kind = parse_container_kind(a.kind);
  std::vector<fs::path> paths(a.bases.begin(), a.bases.end());
  try {
    const SupportFamily family =
        init_family(paths, a.n, parse_position_policy(a.policy), kind, a.out);
    ordered_json j;
    j["manifest"] = a.out;
    j["r"] = family.size();
    j["n_bits"] = family.n_bits();
    j["t1"] = family.t1();
    print(j);
  } catch (const FamilyCollisionError& e) {
    throw Error(std::string(e.what()) + ": '" + a.bases[e.first()] + "' and '" +
                a.bases[e.second()] + "'");
  }
  return kExitOk;
}

struct EmbedArgs {
  FamilyArgs family;
  GeneratorArgs gen;
  std::string key;
  std::string msg;
  std::string msg_file;
  bool chunk = false;
  std::size_t base = 0;
  std::string out;
};

int run_embed(const EmbedArgs& a) {
  const SupportFamily family = build_family(a.family);
  const Stegosystem sys(family, build_generator(a.gen, family.n_bits()));
  const NBitString key = NBitString::from_hex(a.key, sys.key_len());
  const std::size_t n = sys.n_bits();
  if (a.base >= sys.family().size()) {
    throw UsageError("--base " + std::to_string(a.base) + " out of range for " +
                     std::to_string(sys.family().size()) + " bases");
  }

  if (!a.chunk) {
    if (!a.msg_file.empty()) throw UsageError("--msg-file requires --chunk");
    const NBitString message = NBitString::from_hex(a.msg, n);
    store_content(sys.embed(a.base, message, key), fs::path(a.out));
    ordered_json j;
    j["out"] = a.out;
    j["base"] = a.base;
    j["n_bits"] = n;
    print(j);
    return kExitOk;
  }

  const std::vector<std::uint8_t> bytes =
      a.msg_file.empty() ? bytes_from_hex(a.msg) : read_file(a.msg_file);
  const std::size_t bit_length = bytes.size() * 8;
  const auto blocks = chunk_message(bytes, bit_length, n);
  ordered_json sidecar;
  sidecar["bit_length"] = bit_length;
  sidecar["n_bits"] = n;
  sidecar["base"] = a.base;
  auto& files = sidecar["chunks"] = ordered_json::array();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const fs::path p = chunk_path(a.out, b);
    store_content(sys.embed(a.base, blocks[b], key), p);
    files.push_back(p.filename().string());
  }
  const fs::path side = sidecar_path(a.out);
  std::ofstream(side) << sidecar.dump(2) << '\n';
  ordered_json j;
  j["sidecar"] = side.string();
  j["chunks"] = blocks.size();
  j["bit_length"] = bit_length;
  print(j);
  return kExitOk;
}

struct ExtractArgs {
  FamilyArgs family;
  GeneratorArgs gen;
  std::string key;
  std::string in;
  std::string chunks;
  std::string out;
};

int run_extract(const ExtractArgs& a) {
  const SupportFamily family = build_family(a.family);
  const Stegosystem sys(family, build_generator(a.gen, family.n_bits()));
  const NBitString key = sys.inv(NBitString::from_hex(a.key, sys.key_len()));
  const ContainerKind kind = family.base(0).kind();

  if (a.chunks.empty()) {
    if (a.in.empty()) throw UsageError("--in or --chunks is required");
    const Content c = load_content(fs::path(a.in), kind);
    ordered_json j;
    j["message"] = sys.extract(c, key).to_hex();
    print(j);
    return kExitOk;
  }

  std::ifstream side_in(a.chunks);
  if (!side_in) throw Error("cannot open '" + a.chunks + "'");
  ordered_json side;
  try {
    side_in >> side;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed chunk sidecar: " + std::string(e.what()));
  }
  const fs::path dir = fs::path(a.chunks).parent_path();
  std::vector<NBitString> blocks;
  for (const auto& file : side.at("chunks")) {
    blocks.push_back(
        sys.extract(load_content(dir / file.get<std::string>(), kind), key));
  }
  const auto bytes = join_chunks(blocks, side.at("bit_length").get<std::size_t>());
  if (!a.out.empty()) {
    std::ofstream out(a.out, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("cannot write '" + a.out + "'");
  }
  ordered_json j;
  j["message"] = hex_of(bytes);
  j["bit_length"] = side.at("bit_length");
  j["chunks"] = blocks.size();
  print(j);
  return kExitOk;
}

// Detector selection shared by attack and game.
struct DetectorArgs {
  std::string detector = "chi2";
  double threshold = kDefaultChiSquareThreshold;
  std::optional<std::uint64_t> replay_keys;
};

void add_detector_options(CLI::App* cmd, DetectorArgs& args) {
  cmd->add_option("--detector", args.detector,
                  "chi2, replay, constant0, constant1 (game --arena generator "
                  "also accepts zero)")
      ->capture_default_str();
  cmd->add_option("--threshold", args.threshold,
                  "chi2: output 1 iff p-value exceeds this")
      ->capture_default_str();
  cmd->add_option("--replay-keys", args.replay_keys,
                  "replay: number of keys to enumerate (default 2^key-bits, at "
                  "most 65536)");
}

ContentDistinguisher build_detector(const DetectorArgs& a,
                                    const SupportFamily& family,
                                    const GeneratorPtr& g,
                                    const NBitString& m0) {
  if (a.detector == "chi2") {
    if (!(a.threshold > 0.0 && a.threshold < 1.0)) {
      throw UsageError("--threshold must lie in (0, 1)");
    }
    return chi_square_lsb_distinguisher(a.threshold);
  }
  if (a.detector == "constant0") return constant_distinguisher<Content>(false);
  if (a.detector == "constant1") return constant_distinguisher<Content>(true);
  if (a.detector == "replay") {
    std::uint64_t keys = kReplayMaxKeys;
    if (g->key_len() < 16) keys = std::uint64_t{1} << g->key_len();
    if (a.replay_keys) keys = *a.replay_keys;
    try {
      return replay_distinguisher(m0, g, keys, family.pmap());
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown detector '" + a.detector + "'");
}

struct AttackArgs {
  DetectorArgs detector;
  FamilyArgs family;
  GeneratorArgs gen;
  std::string msg;
  std::string kind = "auto";
  std::vector<std::string> inputs;
};

int run_attack(const AttackArgs& a) {
  std::optional<ContentDistinguisher> replay;
  if (a.detector.detector == "replay") {
    const SupportFamily family = build_family(a.family);
    const GeneratorPtr g = build_generator(a.gen, family.n_bits());
    if (a.msg.empty()) throw UsageError("replay needs --msg");
    replay = build_detector(a.detector, family, g,
                            NBitString::from_hex(a.msg, family.n_bits()));
  } else if (a.detector.detector != "chi2" &&
             a.detector.detector != "constant0" &&
             a.detector.detector != "constant1") {
    throw UsageError("unknown detector '" + a.detector.detector + "'");
  }
  if (a.detector.detector == "chi2" &&
      !(a.detector.threshold > 0.0 && a.detector.threshold < 1.0)) {
    throw UsageError("--threshold must lie in (0, 1)");
  }

  for (const std::string& path : a.inputs) {
    const Content c = load_content(fs::path(path), resolve_kind(a.kind, path));
    ordered_json j;
    j["path"] = path;
    if (a.detector.detector == "chi2") {
      const PairsOfValuesReport r = pairs_of_values(c);
      const bool decision =
          !r.undecidable && r.chi_square.p_value > a.detector.threshold;
      j["decision"] = decision ? 1 : 0;
      if (!r.undecidable) {
        j["statistic"] = fixed_decimal(r.chi_square.statistic);
        j["p_value"] = fixed_decimal(r.chi_square.p_value);
        j["dof"] = r.chi_square.dof;
      }
      j["diagnostics"] = r.undecidable
                             ? "undecidable: fewer than 2 nonempty value pairs"
                             : "ok";
    } else if (replay) {
      j["decision"] = (*replay)(c) ? 1 : 0;
      j["diagnostics"] = replay->description();
    } else {
      j["decision"] = a.detector.detector == "constant1" ? 1 : 0;
      j["diagnostics"] = "constant";
    }
    print(j);
  }
  return kExitOk;
}

struct GameArgs {
  DetectorArgs detector;
  FamilyArgs family;
  GeneratorArgs gen;
  std::string msg;
  std::string mode = "exhaustive";
  std::uint64_t trials = 10000;
  std::optional<std::uint64_t> seed;
  std::string arena = "stego";
  int workers = 0;
};

int run_game(const GameArgs& a) {
  GameConfig config;
  config.mode = parse_game_mode(a.mode);
  config.trials = a.trials;
  config.workers = a.workers;
  if (config.mode == GameMode::monte_carlo) {
    if (!a.seed) throw UsageError("--seed is required in monte-carlo mode");
    if (a.trials == 0) throw UsageError("--trials must be positive");
  }
  config.master_seed = a.seed.value_or(0);

  const SupportFamily family = build_family(a.family);
  const GeneratorPtr g = build_generator(a.gen, family.n_bits());
  if (a.msg.empty()) throw UsageError("--msg is required");
  const NBitString m = NBitString::from_hex(a.msg, family.n_bits());

  AdvantageReport report;
  std::string detector_name;
  if (a.arena == "stego") {
    const ContentDistinguisher d = build_detector(a.detector, family, g, m);
    detector_name = d.description();
    report = stego_game(d, Stegosystem(family, g), m, config);
  } else if (a.arena == "generator") {
    std::optional<StringDistinguisher> d;
    if (a.detector.detector == "zero") {
      d = zero_string_distinguisher(family.n_bits());
    } else if (a.detector.detector == "constant0") {
      d = constant_distinguisher<NBitString>(false);
    } else if (a.detector.detector == "constant1") {
      d = constant_distinguisher<NBitString>(true);
    } else {
      d = reduce(build_detector(a.detector, family, g, m), family, m);
    }
    detector_name = d->description();
    report = generator_game(*d, *g, config);
  } else {
    throw UsageError("--arena must be stego or generator");
  }

  ordered_json j = to_json(report);
  j["detector"] = detector_name;
  j["generator"] = to_string(g->kind());
  j["key_bits"] = g->key_len();
  j["n_bits"] = family.n_bits();
  j["bases"] = family.size();
  print(j);
  return kExitOk;
}

struct VerifyArgs {
  FamilyArgs family;
  GeneratorArgs gen;
  std::string mode = "exhaustive";
  int workers = 0;
};

int run_verify(const VerifyArgs& a) {
  if (a.mode != "exhaustive") {
    throw UsageError("verify supports only --mode exhaustive");
  }
  const SupportFamily family = build_family(a.family);
  const Stegosystem sys(family, build_generator(a.gen, family.n_bits()));
  const StegoSecurityReport r = verify_stego_security(sys, a.workers);

  std::size_t exact = 0;
  for (const Rational& tv : r.tv_by_message) exact += tv == Rational{};
  ordered_json j;
  j["mode"] = "exhaustive";
  j["generator"] = to_string(sys.generator().kind());
  j["key_bits"] = sys.key_len();
  j["n_bits"] = sys.n_bits();
  j["bases"] = family.size();
  j["messages"] = r.tv_by_message.size();
  j["tv_distance"] = rational_json(r.max_tv);
  j["worst_message"] = NBitString::from_value(sys.n_bits(), r.worst_message).to_hex();
  j["messages_with_zero_tv"] = exact;
  j["relative_entropy_infinite"] = r.relative_entropy_infinite;
  if (r.relative_entropy_infinite) {
    j["relative_entropy_bits"] = nullptr;
  } else {
    j["relative_entropy_bits"] = fixed_decimal(r.relative_entropy_bits);
  }
  print(j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyed-XOR bit-plane stegosystem with distinguishing games"};
  app.require_subcommand(1);

  FamilyInitArgs init_args;
  auto* init_cmd = app.add_subcommand("family-init", "Build a support family manifest");
  init_cmd->add_option("bases", init_args.bases, "Base content files")->required();
  init_cmd->add_option("--n", init_args.n, "Plane bits")->required();
  init_cmd->add_option("--policy", init_args.policy, "Plane position policy")
      ->capture_default_str();
  init_cmd->add_option("--kind", init_args.kind, "auto, raw or pgm")
      ->capture_default_str();
  init_cmd->add_option("--out", init_args.out, "Manifest path")->required();

  EmbedArgs embed_args;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a message into a base");
  add_family_options(embed_cmd, embed_args.family);
  add_generator_options(embed_cmd, embed_args.gen);
  embed_cmd->add_option("--key", embed_args.key, "Key (hex)")->required();
  embed_cmd->add_option("--msg", embed_args.msg, "Message (hex)");
  embed_cmd->add_option("--msg-file", embed_args.msg_file, "Message file (with --chunk)");
  embed_cmd->add_flag("--chunk", embed_args.chunk,
                      "Split a long message into one content per N-bit block");
  embed_cmd->add_option("--base", embed_args.base, "Base index (0-based)")
      ->capture_default_str();
  embed_cmd->add_option("--out", embed_args.out, "Output content path")->required();

  ExtractArgs extract_args;
  auto* extract_cmd = app.add_subcommand("extract", "Extract a message");
  add_family_options(extract_cmd, extract_args.family);
  add_generator_options(extract_cmd, extract_args.gen);
  extract_cmd->add_option("--key", extract_args.key, "Key (hex)")->required();
  extract_cmd->add_option("--in", extract_args.in, "Stego content");
  extract_cmd->add_option("--chunks", extract_args.chunks, "Chunk sidecar from embed --chunk");
  extract_cmd->add_option("--out", extract_args.out, "Write chunked message bytes here");

  AttackArgs attack_args;
  auto* attack_cmd = app.add_subcommand("attack", "Run a detector over contents");
  add_detector_options(attack_cmd, attack_args.detector);
  add_family_options(attack_cmd, attack_args.family);
  add_generator_options(attack_cmd, attack_args.gen);
  attack_cmd->add_option("--msg", attack_args.msg, "replay: assumed message (hex)");
  attack_cmd->add_option("--kind", attack_args.kind, "auto, raw or pgm")
      ->capture_default_str();
  attack_cmd->add_option("--inputs", attack_args.inputs, "Content files")->required();

  GameArgs game_args;
  auto* game_cmd = app.add_subcommand("game", "Estimate distinguishing advantage");
  add_detector_options(game_cmd, game_args.detector);
  add_family_options(game_cmd, game_args.family);
  add_generator_options(game_cmd, game_args.gen);
  game_cmd->add_option("--msg", game_args.msg, "Fixed message (hex)")->required();
  game_cmd->add_option("--mode", game_args.mode, "exhaustive or monte-carlo")
      ->capture_default_str();
  game_cmd->add_option("--trials", game_args.trials, "Monte-Carlo trials per arm")
      ->capture_default_str();
  game_cmd->add_option("--seed", game_args.seed, "Master seed (monte-carlo)");
  game_cmd->add_option("--arena", game_args.arena, "stego or generator")
      ->capture_default_str();
  game_cmd->add_option("--workers", game_args.workers, "OpenMP threads (0 = default)")
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check stego-security by enumeration");
  add_family_options(verify_cmd, verify_args.family);
  add_generator_options(verify_cmd, verify_args.gen);
  verify_cmd->add_option("--mode", verify_args.mode, "exhaustive")->capture_default_str();
  verify_cmd->add_option("--workers", verify_args.workers, "OpenMP threads (0 = default)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*init_cmd) return run_family_init(init_args);
    if (*embed_cmd) return run_embed(embed_args);
    if (*extract_cmd) return run_extract(extract_args);
    if (*attack_cmd) return run_attack(attack_args);
    if (*game_cmd) return run_game(game_args);
    if (*verify_cmd) return run_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
