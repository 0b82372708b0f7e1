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

#include <httplib.h>

#include "evault/error.hpp"
#include "evault/vaultctl.hpp"

namespace evault::cli {
namespace {

class HttpTransport final : public Transport {
 public:
  explicit HttpTransport(const std::string& url) : url_(url), client_(url) {
    client_.set_connection_timeout(5);
    client_.set_read_timeout(60);
  }

  HttpReply get(const std::string& path, const std::map<std::string, std::string>& query,
                const std::optional<std::string>& token) override {
    httplib::Params params(query.begin(), query.end());
    auto res = client_.Get(path, params, headers(token));
    return reply(res, path);
  }

  HttpReply post(const std::string& path, const std::string& body,
                 const std::string& content_type,
                 const std::optional<std::string>& token) override {
    auto res = client_.Post(path, headers(token), body, content_type);
    return reply(res, path);
  }

 private:
  static httplib::Headers headers(const std::optional<std::string>& token) {
    httplib::Headers h;
    if (token) h.emplace("Authorization", "Bearer " + *token);
    return h;
  }

  HttpReply reply(const httplib::Result& res, const std::string& path) {
    if (!res) {
      throw Error(ErrorCode::IoError, "cannot reach " + url_ + path + ": " +
                                          httplib::to_string(res.error()));
    }
    return {res->status, res->body};
  }

  std::string url_;
  httplib::Client client_;
};

}  // namespace

std::unique_ptr<Transport> connect_http(const std::string& server_url) {
  return std::make_unique<HttpTransport>(server_url);
}

}  // namespace evault::cli
