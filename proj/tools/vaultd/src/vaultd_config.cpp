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

#include "evault/vaultd_config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "evault/error.hpp"

namespace evault {
namespace {

std::optional<std::uint64_t> parse_decimal(std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::uint64_t parse_positive(std::string_view text, std::string_view what) {
  const auto v = parse_decimal(text);
  if (!v || *v == 0) {
    throw Error(ErrorCode::BadRequest,
                std::string(what) + " must be a positive integer, got '" + std::string(text) + "'");
  }
  return *v;
}

}  // namespace

std::optional<std::string> process_env(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (v == nullptr) return std::nullopt;
  return std::string(v);
}

void parse_listen(std::string_view text, VaultdConfig& config) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw Error(ErrorCode::BadRequest, "listen address must be host:port");
  }
  const auto port = parse_decimal(text.substr(colon + 1));
  if (!port || *port > 65535) {
    throw Error(ErrorCode::BadRequest, "listen port must be 0-65535, got '" +
                                           std::string(text.substr(colon + 1)) + "'");
  }
  config.listen_host = std::string(text.substr(0, colon));
  config.listen_port = static_cast<int>(*port);
}

VaultdConfig load_vaultd_config(const std::optional<std::filesystem::path>& file,
                                const EnvLookup& env) {
  VaultdConfig config;
  if (file) {
    std::ifstream in(*file);
    if (!in) throw Error(ErrorCode::IoError, "cannot read config " + file->string());
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorCode::BadRequest, "config " + file->string() + " is not a JSON object");
    }
    try {
      if (j.contains("listen")) parse_listen(j["listen"].get<std::string>(), config);
      if (j.contains("data_dir")) config.data_dir = j["data_dir"].get<std::string>();
      if (j.contains("seal_interval_ms")) {
        config.seal_interval = std::chrono::milliseconds(
            parse_positive(std::to_string(j["seal_interval_ms"].get<std::int64_t>()),
                           "seal_interval_ms"));
      }
      if (j.contains("snapshot_interval")) {
        config.snapshot_interval = parse_positive(
            std::to_string(j["snapshot_interval"].get<std::int64_t>()), "snapshot_interval");
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::BadRequest, std::string("config: ") + e.what());
    }
  }
  if (auto v = env("EVAULT_LISTEN")) parse_listen(*v, config);
  if (auto v = env("EVAULT_DATA_DIR")) config.data_dir = *v;
  if (auto v = env("EVAULT_SEAL_INTERVAL_MS")) {
    config.seal_interval = std::chrono::milliseconds(parse_positive(*v, "EVAULT_SEAL_INTERVAL_MS"));
  }
  if (auto v = env("EVAULT_SNAPSHOT_INTERVAL")) {
    config.snapshot_interval = parse_positive(*v, "EVAULT_SNAPSHOT_INTERVAL");
  }
  return config;
}

}  // namespace evault
