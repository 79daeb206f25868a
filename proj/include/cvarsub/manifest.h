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

#ifndef CVARSUB_MANIFEST_H_
#define CVARSUB_MANIFEST_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace cvarsub {

// Provenance stamped on every file the CLI writes. Everything except the
// timestamp is a pure function of the invocation, so two runs with equal
// manifests must produce byte-identical data sections.
struct RunManifest {
  std::string command_line;
  std::string config_hash;
  std::uint64_t instance_seed = 0;
  std::string version;
  std::string timestamp;
};

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view text);

RunManifest make_manifest(std::string command_line,
                          std::string_view canonical_config,
                          std::uint64_t instance_seed);

nlohmann::json manifest_to_json(const RunManifest& m);
// "# key: value" lines terminated by "\n"; CSV readers should skip lines
// starting with '#'.
std::string manifest_comment_block(const RunManifest& m);

std::string library_version();

}  // namespace cvarsub

#endif  // CVARSUB_MANIFEST_H_
