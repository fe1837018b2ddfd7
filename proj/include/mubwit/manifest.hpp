// Copyright 2026 The mubwit Authors
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

#ifndef MUBWIT_MANIFEST_HPP
#define MUBWIT_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace mubwit {

inline constexpr const char* kVersion = "0.1.0";

// Everything needed to reproduce a CLI run bit-for-bit (given the same
// build): the exact command line, the resolved config, and the seed. The
// digest identifies the produced output.
struct RunManifest {
  std::string command_line;
  nlohmann::json config_snapshot;
  std::uint64_t seed = 0;
  std::string version = kVersion;
  double wall_seconds = 0.0;
  std::string output_digest;  // fnv1a-64 of the output bytes, hex
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);

nlohmann::json manifest_to_json(const RunManifest& m);
void write_manifest(const std::string& path, const RunManifest& m);

}  // namespace mubwit

#endif  // MUBWIT_MANIFEST_HPP
