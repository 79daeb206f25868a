// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvarsub/manifest.h"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <utility>

#ifndef CVARSUB_VERSION
#define CVARSUB_VERSION "dev"
#endif

namespace cvarsub {

std::string library_version() { return CVARSUB_VERSION; }

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::string utc_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunManifest make_manifest(std::string command_line,
                          std::string_view canonical_config,
                          std::uint64_t instance_seed) {
  return RunManifest{std::move(command_line), fnv1a_hex(canonical_config),
                     instance_seed, library_version(), utc_now()};
}

nlohmann::json manifest_to_json(const RunManifest& m) {
  return nlohmann::json{{"command_line", m.command_line},
                        {"config_hash", m.config_hash},
                        {"instance_seed", m.instance_seed},
                        {"version", m.version},
                        {"timestamp", m.timestamp}};
}

std::string manifest_comment_block(const RunManifest& m) {
  std::string out;
  out += "# command_line: " + m.command_line + "\n";
  out += "# config_hash: " + m.config_hash + "\n";
  out += "# instance_seed: " + std::to_string(m.instance_seed) + "\n";
  out += "# version: " + m.version + "\n";
  out += "# timestamp: " + m.timestamp + "\n";
  return out;
}

}  // namespace cvarsub
