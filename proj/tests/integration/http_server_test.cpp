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

#include "evault/http_server.hpp"

#include <thread>

#include <gtest/gtest.h>

#include "evault/vaultctl.hpp"
#include "harness.hpp"

namespace evault {
namespace {

using wire::json;

TEST(HttpServerTest, ServesTheApiOverLoopback) {
  testing::ServiceHarness h;
  HttpServer server(h.api);
  const int port = server.bind("127.0.0.1", 0);
  ASSERT_GT(port, 0);
  std::thread loop([&] { server.listen(); });
  server.wait_until_ready();

  auto client = cli::connect_http("http://127.0.0.1:" + std::to_string(port));
  testing::LedgerFixture ledger;
  cli::HttpReply r = client->post("/tx", wire::to_json(ledger.accepted[0]).dump(),
                                  "application/json", std::nullopt);
  EXPECT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(json::parse(r.body).at("block_height").get<std::uint64_t>(), 1u);

  r = client->get("/chain/head", {}, std::nullopt);
  EXPECT_EQ(json::parse(r.body).at("height").get<std::uint64_t>(), 1u);

  r = client->get("/cases", {{"role_view", "judge"}}, std::string(64, 'e'));
  EXPECT_EQ(r.status, 401);
  EXPECT_EQ(json::parse(r.body).at("code"), "Unauthorized");

  const std::string token = h.login(ledger.registrar());
  r = client->get("/cases/search", {{"q", "a b&c"}}, token);
  EXPECT_EQ(r.status, 200) << r.body;

  std::string binary(70000, '\0');
  for (std::size_t i = 0; i < binary.size(); ++i) binary[i] = static_cast<char>(i * 31);
  r = client->post("/files", binary, "application/octet-stream", token);
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(json::parse(r.body).at("cipher_hash"), keccak256(binary).hex());

  server.stop();
  loop.join();
  EXPECT_THROW(client->get("/chain/head", {}, std::nullopt), Error);
}

TEST(HttpServerTest, BindFailureIsIoError) {
  testing::ServiceHarness h;
  HttpServer a(h.api);
  const int port = a.bind("127.0.0.1", 0);
  HttpServer b(h.api);
  try {
    b.bind("127.0.0.1", port);
    FAIL() << "second bind succeeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

}  // namespace
}  // namespace evault
