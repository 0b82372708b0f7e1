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

#ifndef EVAULT_SERVICE_HPP_
#define EVAULT_SERVICE_HPP_

// Single-node ledger service behind vaultd. One writer thread owns sealing
// and state application; readers take an immutable CommittedView and never
// wait on the writer.

#include <array>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <thread>
#include <vector>

#include "evault/authority.hpp"
#include "evault/block_log.hpp"
#include "evault/contracts.hpp"
#include "evault/filestore.hpp"

namespace evault {

class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::int64_t now_ms() const = 0;
};

class SystemClock final : public Clock {
 public:
  std::int64_t now_ms() const override;
};

struct ServiceConfig {
  std::filesystem::path data_dir;
  std::chrono::milliseconds seal_interval{500};
  std::size_t seal_batch = 100;
  std::uint64_t snapshot_interval = 1000;
  std::size_t mempool_capacity = 10000;
  std::int64_t challenge_ttl_ms = 60'000;
  std::int64_t session_ttl_ms = 30 * 60'000;
};

struct Receipt {
  std::uint64_t block_height = 0;
  Hash256 tx_hash;
};

struct SessionToken {
  std::array<std::uint8_t, 32> token{};
  Uid uid;
  std::int64_t expires_at = 0;

  std::string hex() const { return to_hex(token); }
};

struct CommittedView {
  std::uint64_t height = 0;
  Hash256 tip_hash;
  std::int64_t tip_timestamp = 0;
  std::shared_ptr<const WorldState> state;
};

/// The service's own single-member authority set, derived from its key.
AuthoritySet single_authority(const VerifyKey& key);

class VaultService {
 public:
  /// Recovers from config.data_dir (creating it if needed) and starts the
  /// writer. Throws Error(CorruptLog) if the log cannot be trusted.
  VaultService(ServiceConfig config, SigningKey authority_key,
               std::shared_ptr<const Clock> clock = nullptr);
  ~VaultService();
  VaultService(const VaultService&) = delete;
  VaultService& operator=(const VaultService&) = delete;

  /// Validates against committed state plus pending transactions, then
  /// blocks until the transaction is sealed and fsynced. Throws Error with
  /// the contracts rejection code, or MempoolFull / ShuttingDown.
  Receipt submit_transaction(const Transaction& tx);

  /// Throws Error(UnknownUID).
  std::array<std::uint8_t, 32> issue_challenge(const Uid& uid);
  /// Single-use challenge. Throws UnknownUID, ExpiredChallenge,
  /// BadChallengeSignature.
  SessionToken open_session(const Uid& uid, ByteView signature);
  /// nullopt for unknown, malformed, or expired tokens.
  std::optional<Uid> session_uid(std::string_view token_hex) const;

  CommittedView view() const;
  std::optional<Block> block_at(std::uint64_t height) const;
  const AuthoritySet& authorities() const { return authorities_; }
  const std::vector<std::string>& recovery_warnings() const { return warnings_; }

  ChunkStore& chunks() { return chunks_; }
  const ChunkStore& chunks() const { return chunks_; }
  /// Keyed by manifest_hash(); idempotent.
  void store_manifest(const ObjectManifest& manifest);
  std::optional<ObjectManifest> load_manifest(const Hash256& manifest_hash) const;

  /// Seals what is pending and stops the writer; later submits fail with
  /// ShuttingDown.
  void shutdown();

 private:
  struct Pending {
    Transaction tx;
    Hash256 hash;
    std::promise<Receipt> done;
  };

  void writer_loop();
  void seal(std::vector<Pending> batch);
  void rebuild_pending_state_locked();

  ServiceConfig config_;
  SigningKey key_;
  AuthoritySet authorities_;
  std::shared_ptr<const Clock> clock_;
  DataLayout layout_;
  std::vector<std::string> warnings_;
  DirectoryChunkStore chunks_;
  std::unique_ptr<BlockLog> log_;

  mutable std::shared_mutex chain_mu_;
  Chain chain_;
  std::shared_ptr<const WorldState> committed_;

  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Pending> mempool_;
  WorldState pending_state_;
  bool stop_ = false;

  mutable std::mutex auth_mu_;
  struct Outstanding {
    std::array<std::uint8_t, 32> challenge;
    std::int64_t expires_at;
  };
  std::map<Uid, Outstanding> challenges_;
  std::map<std::string, SessionToken> sessions_;

  mutable std::mutex manifest_mu_;
  std::thread writer_;
};

}  // namespace evault

#endif  // EVAULT_SERVICE_HPP_
