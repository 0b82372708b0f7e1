// Copyright 2026 The eVault Authors
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

#ifndef EVAULT_VAULTD_CONFIG_HPP_
#define EVAULT_VAULTD_CONFIG_HPP_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace evault {

struct VaultdConfig {
  std::string listen_host = "127.0.0.1";
  int listen_port = 8470;
  std::filesystem::path data_dir = "evault-data";
  std::chrono::milliseconds seal_interval{500};
  std::uint64_t snapshot_interval = 1000;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Process environment.
std::optional<std::string> process_env(const std::string& name);

/// Parses "host:port". Throws Error(BadRequest).
void parse_listen(std::string_view text, VaultdConfig& config);

/// Defaults, then the JSON file (keys: listen, data_dir, seal_interval_ms,
/// snapshot_interval) if `file` is set, then EVAULT_LISTEN, EVAULT_DATA_DIR,
/// EVAULT_SEAL_INTERVAL_MS and EVAULT_SNAPSHOT_INTERVAL. Throws
/// Error(BadRequest) on malformed values and Error(IoError) on an unreadable
/// file.
VaultdConfig load_vaultd_config(const std::optional<std::filesystem::path>& file,
                                const EnvLookup& env = process_env);

}  // namespace evault

#endif  // EVAULT_VAULTD_CONFIG_HPP_
