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

#ifndef EVAULT_HTTP_API_HPP_
#define EVAULT_HTTP_API_HPP_

#include <map>
#include <optional>
#include <string>

#include "evault/error.hpp"
#include "evault/service.hpp"

namespace evault {

/// Transport-neutral request. `token` is the bearer token, if any.
struct ApiRequest {
  std::string method;  // "GET" or "POST"
  std::string path;    // without the query string
  std::map<std::string, std::string> query;
  std::optional<std::string> token;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// HTTP status used for an error envelope carrying `code`.
int http_status(ErrorCode code);

/// Routes the vaultd JSON API onto a VaultService. Reads work against a
/// single committed view; the only mutation path is POST /tx.
class HttpApi {
 public:
  explicit HttpApi(VaultService& service) : service_(service) {}

  /// Never throws; failures become error envelopes.
  ApiResponse handle(const ApiRequest& request);

 private:
  ApiResponse route(const ApiRequest& request);
  Uid require_session(const ApiRequest& request) const;

  VaultService& service_;
};

}  // namespace evault

#endif  // EVAULT_HTTP_API_HPP_
