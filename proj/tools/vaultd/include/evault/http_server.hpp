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

#ifndef EVAULT_HTTP_SERVER_HPP_
#define EVAULT_HTTP_SERVER_HPP_

#include <memory>
#include <string>

#include "evault/http_api.hpp"

namespace evault {

/// Socket front end for HttpApi.
class HttpServer {
 public:
  explicit HttpServer(HttpApi& api);
  ~HttpServer();

  /// Binds host:port; port 0 picks a free port. Returns the bound port or
  /// throws Error(IoError).
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  void listen();
  /// Blocks until a concurrent listen() accepts connections.
  void wait_until_ready() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace evault

#endif  // EVAULT_HTTP_SERVER_HPP_
