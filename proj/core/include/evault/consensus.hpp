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

#ifndef EVAULT_CONSENSUS_HPP_
#define EVAULT_CONSENSUS_HPP_

// Round-robin proof-of-authority replication and a deterministic,
// single-threaded network simulator with virtual time.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evault/authority.hpp"
#include "evault/chain.hpp"
#include "evault/contracts.hpp"

namespace evault {

using Chain = std::vector<Block>;

/// Longest valid chain wins; equal lengths go to the lexicographically
/// smaller tip hash. Throws Error(InvalidChain) if candidate fails
/// verify_chain or does not start at genesis.
const Chain& choose_fork(const Chain& current, const Chain& candidate,
                         const AuthoritySet& authorities, unsigned work_bits);

/// True if candidate beats current under the fork-choice rule, ignoring
/// validity.
bool fork_preferred(const Chain& current, const Chain& candidate);

struct NetworkConfig {
  std::uint32_t node_count = 4;
  std::uint64_t mean_delay_ticks = 2;
  double drop_probability = 0.0;  // [0, 1)
  std::uint64_t rng_seed = 42;
  unsigned work_bits = 0;
  std::uint64_t retransmit_every = 10;
  std::size_t max_block_txs = 100;
};

struct ScheduledTx {
  std::uint64_t tick = 0;
  std::uint32_t node = 0;
  Transaction tx;
};

struct Message {
  enum class Kind { Chain, Tx };
  Kind kind = Kind::Tx;
  std::uint32_t from = 0;
  std::uint64_t deliver_at = 0;
  std::uint64_t seq = 0;  // global send order; breaks delivery ties
  std::shared_ptr<const Chain> chain;
  std::optional<Transaction> tx;
};

/// One replica: chain, pending transactions, and current world state.
class NodeState {
 public:
  explicit NodeState(std::uint32_t node_id = 0);

  std::uint32_t id() const { return id_; }
  const Chain& chain() const { return chain_; }
  const Block& tip() const { return chain_.back(); }
  std::uint64_t height() const { return chain_.back().header.height; }
  const WorldState& world() const { return world_; }
  const std::map<Hash256, Transaction>& mempool() const { return mempool_; }
  std::vector<Message>& inbox() { return inbox_; }
  const std::vector<Message>& inbox() const { return inbox_; }

  /// Adds a pending transaction unless it is already known or its nonce is
  /// already consumed. Returns true if added.
  bool add_transaction(const Transaction& tx);

  /// Adopts candidate if it wins fork choice and every block validates and
  /// applies. Returns true on adoption.
  bool offer_chain(const Chain& candidate, const AuthoritySet& authorities,
                   unsigned work_bits);

  /// Builds and appends a block from applicable mempool transactions, or
  /// returns nullopt if none apply.
  std::optional<Block> propose(const Authority& self, const SigningKey& key,
                               std::int64_t timestamp, unsigned work_bits,
                               std::size_t max_txs);

  /// Replaces the whole chain without fork choice; used by crash recovery
  /// after the chain has been validated.
  void reset(Chain chain, WorldState world);

 private:
  void prune_mempool();

  std::uint32_t id_;
  Chain chain_;
  WorldState world_;
  std::map<Hash256, Transaction> mempool_;
  std::vector<Message> inbox_;
};

struct SimEvent {
  std::uint64_t tick = 0;
  std::uint32_t node = 0;
  std::string kind;  // inject | propose | adopt | reject | drop
  std::optional<Hash256> hash;

  /// "<tick> <node> <kind> <hash|->"
  std::string to_line() const;
  friend bool operator==(const SimEvent&, const SimEvent&) = default;
};

struct SimulationResult {
  std::vector<NodeState> nodes;
  std::vector<SimEvent> events;

  bool tips_agree() const;
  bool states_agree() const;
  std::string event_log() const;
};

/// Deterministic signing keys and authority set for a simulated network.
struct SimulatedAuthorities {
  AuthoritySet set;
  std::vector<SigningKey> keys;
};
SimulatedAuthorities simulation_authorities(std::uint32_t node_count);

/// Pure function of its inputs: equal arguments give bit-identical results.
/// Throws Error(ZeroTicks), Error(BadSchedule), Error(EmptyAuthoritySet).
SimulationResult simulate(const NetworkConfig& config,
                          std::span<const ScheduledTx> schedule,
                          std::uint64_t ticks);

/// Virtual milliseconds per simulator tick.
inline constexpr std::int64_t kTickMillis = 100;

// Scenario files: "key value" lines (node_count, seed, drop, delay,
// work_bits, ticks, retransmit) plus "tx <tick> <node> <hex>" lines where
// hex is the canonical transaction encoding. '#' starts a comment.
struct Scenario {
  NetworkConfig config;
  std::uint64_t ticks = 200;
  std::vector<ScheduledTx> schedule;
};

Scenario parse_scenario(std::string_view text);
std::string format_scenario(const Scenario& scenario);

/// A realistic, dependency-ordered workload (registrations, filings,
/// hearings, uploads, custody transfers, signatures) of exactly tx_count
/// valid transactions spread over ticks [1, last_tick], injected round-robin
/// across nodes.
std::vector<ScheduledTx> demo_workload(std::uint32_t node_count,
                                       std::size_t tx_count,
                                       std::uint64_t last_tick,
                                       std::uint64_t seed = 7);

}  // namespace evault

#endif  // EVAULT_CONSENSUS_HPP_
