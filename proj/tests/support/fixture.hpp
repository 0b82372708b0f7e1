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

#ifndef EVAULT_TESTS_FIXTURE_HPP_
#define EVAULT_TESTS_FIXTURE_HPP_

#include <deque>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "evault/consensus.hpp"
#include "evault/contracts.hpp"
#include "evault/identity.hpp"
#include "evault/transaction.hpp"
#include "evault/world_state.hpp"

namespace evault::testing {

/// Deterministic key from a label.
SigningKey key_for(std::string_view label);

struct Actor {
  std::string label;
  IdentityDetails details;
  SigningKey key;
  Uid uid;
  std::uint64_t nonce = 0;  // last accepted
};

Actor make_actor(const std::string& label, Role role);

/// A WorldState driven one transaction per block, with helpers for the
/// common happy paths. Helpers throw std::runtime_error on rejection.
class LedgerFixture {
 public:
  LedgerFixture();

  Actor& registrar() { return actors_.front(); }
  Actor& add(const std::string& label, Role role);

  /// Signed with the actor's next nonce; does not apply.
  Transaction make(const Actor& actor, TxPayload payload, std::uint64_t nonce_delta = 1) const;
  /// Signs, applies at the next height, advances the nonce on success.
  std::optional<TxRejection> submit(Actor& actor, TxPayload payload);
  std::optional<TxRejection> apply(const Transaction& tx);
  void must(Actor& actor, TxPayload payload);

  Hash256 file_case(const std::string& type, const Actor& petitioner, const Actor& defendant,
                    const std::vector<const Actor*>& lawyers);
  Hash256 upload(Actor& lawyer, const Hash256& case_id, const std::string& title,
                 const std::string& content);

  WorldState state;
  std::uint64_t height = 0;
  std::vector<Transaction> accepted;

 private:
  std::deque<Actor> actors_;
};

class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Genesis plus `blocks` signed blocks under the round-robin schedule of
/// `authorities`, each holding 1-4 structurally valid transactions.
std::vector<Block> build_signed_chain(std::size_t blocks, const SimulatedAuthorities& authorities,
                                      std::mt19937_64& rng, unsigned work_bits = 0);

/// Seals `txs` into consecutive blocks of at most `per_block` transactions,
/// all proposed by `self`, timestamps 1000 ms apart.
std::vector<Block> seal_blocks(const std::vector<Transaction>& txs, const Authority& self,
                               const SigningKey& key, std::size_t per_block = 1);

/// Flips one byte of the block's canonical encoding, choosing uniformly
/// among positions whose mutation still decodes.
Block mutate_block(const Block& block, std::mt19937_64& rng);

Bytes random_bytes(std::mt19937_64& rng, std::size_t n);
Hash256 random_hash(std::mt19937_64& rng);

}  // namespace evault::testing

#endif  // EVAULT_TESTS_FIXTURE_HPP_
