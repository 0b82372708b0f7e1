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

#include <csignal>
#include <filesystem>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "evault/block_log.hpp"
#include "evault/http_server.hpp"
#include "evault/vaultd_config.hpp"

namespace {

evault::SigningKey load_or_create_key(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    const auto seed = evault::random_seed();
    evault::write_seed_file(path, seed);
    std::cerr << "vaultd: generated authority key " << path.string() << "\n";
  }
  return evault::read_seed_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eVault ledger service"};
  std::string config_path;
  std::string listen;
  std::string data_dir;
  app.add_option("--config", config_path, "JSON config file")->envname("EVAULT_VAULTD_CONFIG");
  app.add_option("--listen", listen, "host:port, overrides config and environment");
  app.add_option("--data-dir", data_dir, "data directory, overrides config and environment");
  CLI11_PARSE(app, argc, argv);

  try {
    evault::VaultdConfig config = evault::load_vaultd_config(
        config_path.empty() ? std::nullopt
                            : std::optional<std::filesystem::path>(config_path));
    if (!listen.empty()) evault::parse_listen(listen, config);
    if (!data_dir.empty()) config.data_dir = data_dir;

    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    std::filesystem::create_directories(config.data_dir);
    evault::SigningKey key =
        load_or_create_key(evault::DataLayout{config.data_dir}.authority_key());
    evault::ServiceConfig service_config;
    service_config.data_dir = config.data_dir;
    service_config.seal_interval = config.seal_interval;
    service_config.snapshot_interval = config.snapshot_interval;
    evault::VaultService service(service_config, key);
    for (const std::string& w : service.recovery_warnings()) {
      std::cerr << "vaultd: recovery: " << w << "\n";
    }

    evault::HttpApi api(service);
    evault::HttpServer server(api);
    const int port = server.bind(config.listen_host, config.listen_port);
    const auto view = service.view();
    std::cerr << "vaultd: listening on " << config.listen_host << ":" << port
              << ", height " << view.height << ", tip " << view.tip_hash.hex() << "\n";

    std::thread listener([&] { server.listen(); });
    int received = 0;
    sigwait(&signals, &received);
    std::cerr << "vaultd: signal " << received << ", shutting down\n";
    server.stop();
    listener.join();
    service.shutdown();
    return 0;
  } catch (const evault::Error& e) {
    std::cerr << "vaultd: " << evault::error_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "vaultd: " << e.what() << "\n";
    return 1;
  }
}
