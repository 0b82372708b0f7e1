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

#ifndef EVAULT_VAULTCTL_HPP_
#define EVAULT_VAULTCTL_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace evault::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

struct HttpReply {
  int status = 0;
  std::string body;
};

/// Minimal client surface vaultctl needs from vaultd. Throws
/// Error(IoError) when the server cannot be reached.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual HttpReply get(const std::string& path,
                        const std::map<std::string, std::string>& query,
                        const std::optional<std::string>& token) = 0;
  virtual HttpReply post(const std::string& path, const std::string& body,
                         const std::string& content_type,
                         const std::optional<std::string>& token) = 0;
};

/// HTTP transport for a base URL such as "http://127.0.0.1:8470".
std::unique_ptr<Transport> connect_http(const std::string& server_url);

struct Environment {
  std::function<std::unique_ptr<Transport>(const std::string& server_url)> connect =
      connect_http;
  std::function<std::optional<std::string>(const std::string& name)> getenv;
  std::function<std::int64_t()> now_ms;
};

/// Default environment: real HTTP, process environment, system clock.
Environment default_environment();

/// Runs one vaultctl invocation. `args` excludes the program name. Returns
/// kExitOk, kExitDomainError or kExitUsage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = default_environment());

}  // namespace evault::cli

#endif  // EVAULT_VAULTCTL_HPP_
