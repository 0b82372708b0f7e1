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

#include "evault/service.hpp"

#include <fstream>
#include <iostream>

#include "evault/chain.hpp"
#include "evault/error.hpp"

namespace evault {
namespace fs = std::filesystem;

std::int64_t SystemClock::now_ms() const {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

AuthoritySet single_authority(const VerifyKey& key) {
  IdentityDetails details{"vaultd authority", key.hex(), Role::Registrar, ""};
  return AuthoritySet({Authority{0, derive_uid(details), key}});
}

namespace {

fs::path ensure_dir(const fs::path& p) {
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + p.string() + ": " + ec.message());
  return p;
}

}  // namespace

VaultService::VaultService(ServiceConfig config, SigningKey authority_key,
                           std::shared_ptr<const Clock> clock)
    : config_(std::move(config)),
      key_(std::move(authority_key)),
      authorities_(single_authority(key_.verify_key())),
      clock_(clock ? std::move(clock) : std::make_shared<SystemClock>()),
      layout_{ensure_dir(config_.data_dir)},
      chunks_(layout_.chunks()) {
  if (config_.seal_batch == 0) config_.seal_batch = 1;
  if (config_.snapshot_interval == 0) config_.snapshot_interval = 1000;
  ensure_dir(layout_.manifests());

  Recovery rec = recover(layout_.root, authorities_);
  warnings_ = std::move(rec.warnings);
  chain_ = rec.node.chain();
  committed_ = std::make_shared<const WorldState>(rec.node.world());
  pending_state_ = *committed_;
  log_ = std::make_unique<BlockLog>(layout_.log());
  writer_ = std::thread([this] { writer_loop(); });
}

VaultService::~VaultService() { shutdown(); }

void VaultService::shutdown() {
  {
    std::lock_guard lock(mu_);
    stop_ = true;
  }
  cv_.notify_all();
  if (writer_.joinable()) writer_.join();
}

Receipt VaultService::submit_transaction(const Transaction& tx) {
  std::future<Receipt> done;
  {
    std::lock_guard lock(mu_);
    if (stop_) throw Error(ErrorCode::ShuttingDown, "service is shutting down");
    if (mempool_.size() >= config_.mempool_capacity) {
      throw Error(ErrorCode::MempoolFull, "mempool holds " +
                                              std::to_string(mempool_.size()) +
                                              " transactions");
    }
    std::uint64_t next_height;
    {
      std::shared_lock chain_lock(chain_mu_);
      next_height = chain_.size();
    }
    if (auto r = apply_transaction_in_place(pending_state_, tx, next_height)) {
      throw Error(r->code, r->message);
    }
    Pending p{tx, tx.hash(), {}};
    done = p.done.get_future();
    mempool_.push_back(std::move(p));
    if (mempool_.size() >= config_.seal_batch) cv_.notify_one();
  }
  return done.get();
}

void VaultService::writer_loop() {
  std::unique_lock lock(mu_);
  while (true) {
    cv_.wait_for(lock, config_.seal_interval,
                 [&] { return stop_ || mempool_.size() >= config_.seal_batch; });
    if (mempool_.empty()) {
      if (stop_) break;
      continue;
    }
    std::vector<Pending> batch;
    while (!mempool_.empty() && batch.size() < config_.seal_batch) {
      batch.push_back(std::move(mempool_.front()));
      mempool_.pop_front();
    }
    lock.unlock();
    seal(std::move(batch));
    lock.lock();
  }
}

void VaultService::rebuild_pending_state_locked() {
  pending_state_ = *committed_;
  const std::uint64_t height = chain_.size();
  for (auto it = mempool_.begin(); it != mempool_.end();) {
    if (auto r = apply_transaction_in_place(pending_state_, it->tx, height)) {
      it->done.set_exception(std::make_exception_ptr(Error(r->code, r->message)));
      it = mempool_.erase(it);
    } else {
      ++it;
    }
  }
}

void VaultService::seal(std::vector<Pending> batch) {
  const std::uint64_t height = chain_.size();
  WorldState next = *committed_;
  std::vector<Transaction> txs;
  std::vector<Pending*> accepted;
  bool diverged = false;
  for (Pending& p : batch) {
    if (auto r = apply_transaction_in_place(next, p.tx, height)) {
      p.done.set_exception(std::make_exception_ptr(Error(r->code, r->message)));
      diverged = true;
    } else {
      txs.push_back(p.tx);
      accepted.push_back(&p);
    }
  }

  auto fail_all = [&](const std::exception_ptr& err) {
    for (Pending* p : accepted) p->done.set_exception(err);
    std::lock_guard lock(mu_);
    rebuild_pending_state_locked();
  };

  if (txs.empty()) {
    if (diverged) fail_all(nullptr);
    return;
  }
  Block block;
  try {
    const BlockHeader& parent = chain_.back().header;
    const std::int64_t ts = std::max(clock_->now_ms(), parent.timestamp);
    block = build_block(parent, std::move(txs), authorities_[0].proposer, ts, key_);
    log_->append(block);
  } catch (...) {
    fail_all(std::current_exception());
    return;
  }
  {
    std::unique_lock lock(chain_mu_);
    chain_.push_back(block);
    committed_ = std::make_shared<const WorldState>(std::move(next));
  }
  if (height % config_.snapshot_interval == 0) {
    try {
      write_snapshot(layout_.snapshot(), {height, block.hash(), *committed_});
    } catch (const std::exception& e) {
      std::cerr << "vaultd: snapshot at height " << height << " failed: " << e.what()
                << "\n";
    }
  }
  if (diverged) {
    std::lock_guard lock(mu_);
    rebuild_pending_state_locked();
  }
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    accepted[i]->done.set_value({height, accepted[i]->hash});
  }
}

std::array<std::uint8_t, 32> VaultService::issue_challenge(const Uid& uid) {
  if (view().state->find_identity(uid) == nullptr) {
    throw Error(ErrorCode::UnknownUID, "uid " + uid.hex() + " is not registered");
  }
  std::array<std::uint8_t, 32> challenge = random_seed();
  std::lock_guard lock(auth_mu_);
  challenges_[uid] = {challenge, clock_->now_ms() + config_.challenge_ttl_ms};
  return challenge;
}

SessionToken VaultService::open_session(const Uid& uid, ByteView signature) {
  const Identity* id = view().state->find_identity(uid);
  if (id == nullptr) {
    throw Error(ErrorCode::UnknownUID, "uid " + uid.hex() + " is not registered");
  }
  const VerifyKey key = id->public_key;
  std::lock_guard lock(auth_mu_);
  auto it = challenges_.find(uid);
  const std::int64_t now = clock_->now_ms();
  if (it == challenges_.end()) {
    throw Error(ErrorCode::ExpiredChallenge, "no outstanding challenge for this uid");
  }
  if (now > it->second.expires_at) {
    challenges_.erase(it);
    throw Error(ErrorCode::ExpiredChallenge, "challenge expired");
  }
  if (!verify(key, it->second.challenge, signature)) {
    throw Error(ErrorCode::BadChallengeSignature,
                "challenge signature does not verify under the registered key");
  }
  challenges_.erase(it);
  SessionToken token{random_seed(), uid, now + config_.session_ttl_ms};
  sessions_[token.hex()] = token;
  return token;
}

std::optional<Uid> VaultService::session_uid(std::string_view token_hex) const {
  std::lock_guard lock(auth_mu_);
  auto it = sessions_.find(std::string(token_hex));
  if (it == sessions_.end()) return std::nullopt;
  if (clock_->now_ms() > it->second.expires_at) return std::nullopt;
  return it->second.uid;
}

CommittedView VaultService::view() const {
  std::shared_lock lock(chain_mu_);
  const BlockHeader& tip = chain_.back().header;
  return {tip.height, tip.hash(), tip.timestamp, committed_};
}

std::optional<Block> VaultService::block_at(std::uint64_t height) const {
  std::shared_lock lock(chain_mu_);
  if (height >= chain_.size()) return std::nullopt;
  return chain_[height];
}

void VaultService::store_manifest(const ObjectManifest& manifest) {
  const fs::path path = layout_.manifests() / (manifest.manifest_hash().hex() + ".manifest");
  std::lock_guard lock(manifest_mu_);
  if (fs::exists(path)) return;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    Bytes enc = manifest.encode();
    out.write(reinterpret_cast<const char*>(enc.data()),
              static_cast<std::streamsize>(enc.size()));
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::permissions(tmp, fs::perms::owner_read | fs::perms::owner_write,
                  fs::perm_options::replace, ec);
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot install " + path.string());
}

std::optional<ObjectManifest> VaultService::load_manifest(const Hash256& manifest_hash) const {
  const fs::path path = layout_.manifests() / (manifest_hash.hex() + ".manifest");
  std::lock_guard lock(manifest_mu_);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return ObjectManifest::decode(data);
}

}  // namespace evault
