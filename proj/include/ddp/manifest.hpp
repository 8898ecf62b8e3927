// Copyright 2026 The ddp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <openssl/evp.h>

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ddp/errors.hpp"
#include "ddp/version.hpp"

namespace ddp {

inline std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("sha256_hex: EVP_Digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

inline std::string sha256_hex_of_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("sha256_hex_of_file: cannot open '" +
                             path.string() + "'");
  }
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  return sha256_hex(content);
}

// Writes via a sibling temp file + rename, so readers never observe a
// half-written output.
inline void write_file_atomic(const std::filesystem::path& path,
                              std::string_view content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("write_file_atomic: cannot open '" +
                               tmp.string() + "'");
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw std::runtime_error("write_file_atomic: write to '" + tmp.string() +
                               "' failed");
    }
  }
  std::filesystem::rename(tmp, path);
}

// Reproducibility sidecar written next to every produced artifact: which
// command ran, with what seed and effective configuration, over which inputs
// (content-addressed), producing which outputs.
struct RunManifest {
  std::string command;
  std::uint64_t seed = 0;
  nlohmann::ordered_json config;  // effective settings after precedence
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, sha256)
  std::vector<std::string> outputs;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "ddp";
    j["version"] = kVersion;
    j["command"] = command;
    j["created_utc"] = now_utc_iso8601();
    j["seed"] = seed;
    j["config"] = config;
    j["inputs"] = nlohmann::ordered_json::array();
    for (const auto& [path, digest] : inputs) {
      j["inputs"].push_back({{"path", path}, {"sha256", digest}});
    }
    j["outputs"] = outputs;
    return j;
  }

  static std::string now_utc_iso8601() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }
};

inline void write_manifest(const RunManifest& manifest,
                           const std::filesystem::path& path) {
  write_file_atomic(path, manifest.to_json().dump(2) + "\n");
}

}  // namespace ddp
