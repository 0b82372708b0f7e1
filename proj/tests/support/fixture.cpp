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

#include "fixture.hpp"

#include <stdexcept>

#include "evault/chain.hpp"

#include <unistd.h>

namespace evault::testing {

SigningKey key_for(std::string_view label) {
  return SigningKey::from_seed(keccak256("test-key/" + std::string(label)).bytes);
}

Actor make_actor(const std::string& label, Role role) {
  IdentityDetails details{label, "NID-" + label, role, label + "@example.test"};
  const Uid uid = derive_uid(details);
  return Actor{label, std::move(details), key_for(label), uid};
}

LedgerFixture::LedgerFixture() {
  actors_.push_back(make_actor("registrar", Role::Registrar));
  Actor& r = actors_.front();
  Transaction tx = make_transaction(tx::RegisterIdentity{r.details, r.key.verify_key()}, r.uid,
                                    1, 1000, r.key);
  if (auto rej = apply(tx)) throw std::runtime_error("bootstrap failed: " + rej->message);
  r.nonce = 1;
}

Actor& LedgerFixture::add(const std::string& label, Role role) {
  actors_.push_back(make_actor(label, role));
  Actor& a = actors_.back();
  must(registrar(), tx::RegisterIdentity{a.details, a.key.verify_key()});
  return a;
}

Transaction LedgerFixture::make(const Actor& actor, TxPayload payload,
                                std::uint64_t nonce_delta) const {
  return make_transaction(std::move(payload), actor.uid, actor.nonce + nonce_delta,
                          1000 + static_cast<std::int64_t>(height), actor.key);
}

std::optional<TxRejection> LedgerFixture::apply(const Transaction& tx) {
  auto rej = apply_transaction_in_place(state, tx, height + 1);
  if (!rej) {
    ++height;
    accepted.push_back(tx);
  }
  return rej;
}

std::optional<TxRejection> LedgerFixture::submit(Actor& actor, TxPayload payload) {
  auto rej = apply(make(actor, std::move(payload)));
  if (!rej) ++actor.nonce;
  return rej;
}

void LedgerFixture::must(Actor& actor, TxPayload payload) {
  const std::string kind(kind_name(payload));
  if (auto rej = submit(actor, std::move(payload))) {
    throw std::runtime_error(kind + " by " + actor.label + " rejected: " +
                             std::string(error_name(rej->code)) + ": " + rej->message);
  }
}

Hash256 LedgerFixture::file_case(const std::string& type, const Actor& petitioner,
                                 const Actor& defendant,
                                 const std::vector<const Actor*>& lawyers) {
  tx::FileCase p{type, petitioner.uid, defendant.uid, {}};
  for (const Actor* l : lawyers) p.lawyers.push_back(l->uid);
  must(registrar(), std::move(p));
  return accepted.back().hash();
}

Hash256 LedgerFixture::upload(Actor& lawyer, const Hash256& case_id, const std::string& title,
                              const std::string& content) {
  const Hash256 content_hash = keccak256(content);
  must(lawyer, tx::UploadDocument{case_id, title, content_hash,
                                  keccak256("manifest/" + content), content.size()});
  return accepted.back().hash();
}

TempDir::TempDir() {
  std::string tmpl = (std::filesystem::temp_directory_path() / "evault-test-XXXXXX").string();
  if (mkdtemp(tmpl.data()) == nullptr) throw std::runtime_error("mkdtemp failed");
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::vector<Block> build_signed_chain(std::size_t blocks, const SimulatedAuthorities& authorities,
                                      std::mt19937_64& rng, unsigned work_bits) {
  const SigningKey sender = key_for("chain-sender");
  const Uid sender_uid{keccak256("chain-sender")};
  std::vector<Block> chain{genesis_block()};
  std::uint64_t nonce = 0;
  for (std::size_t h = 1; h <= blocks; ++h) {
    std::vector<Transaction> txs;
    const std::size_t n = 1 + rng() % 4;
    for (std::size_t k = 0; k < n; ++k) {
      txs.push_back(make_transaction(tx::ScheduleHearing{random_hash(rng), static_cast<std::int64_t>(rng() % 100000)},
                                     sender_uid, ++nonce, static_cast<std::int64_t>(h) * 100, sender));
    }
    const Authority& who = authorities.set.proposer_for(h);
    chain.push_back(build_block(chain.back().header, std::move(txs), who.proposer,
                                static_cast<std::int64_t>(h) * 100, authorities.keys[who.node_id],
                                work_bits));
  }
  return chain;
}

std::vector<Block> seal_blocks(const std::vector<Transaction>& txs, const Authority& self,
                               const SigningKey& key, std::size_t per_block) {
  std::vector<Block> chain{genesis_block()};
  for (std::size_t i = 0; i < txs.size(); i += per_block) {
    std::vector<Transaction> batch(txs.begin() + static_cast<long>(i),
                                   txs.begin() + static_cast<long>(std::min(txs.size(), i + per_block)));
    const auto ts = static_cast<std::int64_t>(chain.size()) * 1000;
    chain.push_back(build_block(chain.back().header, std::move(batch), self.proposer, ts, key));
  }
  return chain;
}

Block mutate_block(const Block& block, std::mt19937_64& rng) {
  const Bytes enc = block.encode();
  while (true) {
    Bytes copy = enc;
    const std::size_t pos = rng() % copy.size();
    copy[pos] ^= static_cast<std::uint8_t>(1 + rng() % 255);
    try {
      return Block::decode(copy);
    } catch (const Error&) {
    }
  }
}

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes out(n);
  for (std::size_t i = 0; i < n; i += 8) {
    std::uint64_t v = rng();
    for (std::size_t k = 0; k < 8 && i + k < n; ++k) out[i + k] = static_cast<std::uint8_t>(v >> (8 * k));
  }
  return out;
}

Hash256 random_hash(std::mt19937_64& rng) {
  Hash256 h;
  for (std::size_t i = 0; i < 32; i += 8) {
    std::uint64_t v = rng();
    for (std::size_t k = 0; k < 8; ++k) h.bytes[i + k] = static_cast<std::uint8_t>(v >> (8 * k));
  }
  return h;
}

}  // namespace evault::testing
