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

#include <algorithm>
#include <random>
#include <sstream>

#include "evault/consensus.hpp"
#include "evault/error.hpp"

namespace evault {
namespace {

// Portable draws: std::mt19937_64 is fully specified, the standard
// distributions are not, so mapping to ranges is done by hand.
class SimRng {
 public:
  explicit SimRng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t delay(std::uint64_t mean) {
    if (mean <= 1) return 1;
    return 1 + engine_() % (2 * mean - 1);  // uniform on [1, 2*mean-1]
  }

 private:
  std::mt19937_64 engine_;
};

class Network {
 public:
  Network(const NetworkConfig& config, std::vector<NodeState>& nodes,
          std::vector<SimEvent>& events)
      : config_(config), nodes_(nodes), events_(events), rng_(config.rng_seed) {}

  void broadcast(std::uint32_t from, std::uint64_t now, const Message& proto,
                 const std::optional<Hash256>& hash) {
    for (std::uint32_t to = 0; to < nodes_.size(); ++to) {
      if (to == from) continue;
      if (config_.drop_probability > 0 && rng_.unit() < config_.drop_probability) {
        events_.push_back({now, to, "drop", hash});
        continue;
      }
      Message m = proto;
      m.from = from;
      m.deliver_at = now + rng_.delay(config_.mean_delay_ticks);
      m.seq = next_seq_++;
      nodes_[to].inbox().push_back(std::move(m));
    }
  }

  void send_chain(const NodeState& node, std::uint64_t now) {
    Message m;
    m.kind = Message::Kind::Chain;
    m.chain = std::make_shared<const Chain>(node.chain());
    broadcast(node.id(), now, m, node.tip().hash());
  }

  void send_tx(std::uint32_t from, const Transaction& tx, std::uint64_t now) {
    Message m;
    m.kind = Message::Kind::Tx;
    m.tx = tx;
    broadcast(from, now, m, tx.hash());
  }

 private:
  const NetworkConfig& config_;
  std::vector<NodeState>& nodes_;
  std::vector<SimEvent>& events_;
  SimRng rng_;
  std::uint64_t next_seq_ = 0;
};

}  // namespace

std::string SimEvent::to_line() const {
  std::ostringstream out;
  out << tick << ' ' << node << ' ' << kind << ' ' << (hash ? hash->hex() : "-");
  return out.str();
}

bool SimulationResult::tips_agree() const {
  return std::all_of(nodes.begin(), nodes.end(), [&](const NodeState& n) {
    return n.tip().hash() == nodes.front().tip().hash();
  });
}

bool SimulationResult::states_agree() const {
  const Bytes first = nodes.front().world().encode();
  return std::all_of(nodes.begin(), nodes.end(),
                     [&](const NodeState& n) { return n.world().encode() == first; });
}

std::string SimulationResult::event_log() const {
  std::string out;
  for (const SimEvent& e : events) {
    out += e.to_line();
    out += '\n';
  }
  return out;
}

SimulatedAuthorities simulation_authorities(std::uint32_t node_count) {
  if (node_count == 0) {
    throw Error(ErrorCode::EmptyAuthoritySet, "simulation needs at least one node");
  }
  std::vector<Authority> members;
  std::vector<SigningKey> keys;
  for (std::uint32_t i = 0; i < node_count; ++i) {
    const std::string label = "evault/sim-authority/" + std::to_string(i);
    Hash256 seed = keccak256(label);
    SigningKey key = SigningKey::from_seed(seed.bytes);
    IdentityDetails details{"authority " + std::to_string(i), label, Role::Registrar, ""};
    members.push_back({i, derive_uid(details), key.verify_key()});
    keys.push_back(key);
  }
  return {AuthoritySet(std::move(members)), std::move(keys)};
}

SimulationResult simulate(const NetworkConfig& config,
                          std::span<const ScheduledTx> schedule, std::uint64_t ticks) {
  if (ticks == 0) throw Error(ErrorCode::ZeroTicks, "simulation needs at least one tick");
  if (!(config.drop_probability >= 0.0 && config.drop_probability < 1.0)) {
    throw std::invalid_argument("drop_probability must be in [0, 1)");
  }
  SimulatedAuthorities authorities = simulation_authorities(config.node_count);
  for (const ScheduledTx& s : schedule) {
    if (s.node >= config.node_count) {
      throw Error(ErrorCode::BadSchedule,
                  "transaction scheduled for unknown node " + std::to_string(s.node));
    }
    if (s.tick == 0 || s.tick > ticks) {
      throw Error(ErrorCode::BadSchedule,
                  "transaction scheduled outside ticks 1.." + std::to_string(ticks));
    }
  }
  std::vector<const ScheduledTx*> ordered;
  for (const ScheduledTx& s : schedule) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ScheduledTx* a, const ScheduledTx* b) {
                     return a->tick < b->tick;
                   });

  SimulationResult result;
  for (std::uint32_t i = 0; i < config.node_count; ++i) result.nodes.emplace_back(i);
  Network net(config, result.nodes, result.events);
  std::size_t next_scheduled = 0;

  for (std::uint64_t tick = 1; tick <= ticks; ++tick) {
    // 1. deliveries
    for (NodeState& node : result.nodes) {
      auto& inbox = node.inbox();
      std::vector<Message> due;
      auto split = std::stable_partition(inbox.begin(), inbox.end(),
                                         [&](const Message& m) { return m.deliver_at > tick; });
      due.assign(std::make_move_iterator(split), std::make_move_iterator(inbox.end()));
      inbox.erase(split, inbox.end());
      std::sort(due.begin(), due.end(), [](const Message& a, const Message& b) {
        return std::tie(a.deliver_at, a.seq) < std::tie(b.deliver_at, b.seq);
      });
      for (const Message& m : due) {
        if (m.kind == Message::Kind::Tx) {
          node.add_transaction(*m.tx);
          continue;
        }
        if (!fork_preferred(node.chain(), *m.chain)) continue;
        bool adopted = node.offer_chain(*m.chain, authorities.set, config.work_bits);
        result.events.push_back(
            {tick, node.id(), adopted ? "adopt" : "reject", m.chain->back().hash()});
      }
    }

    // 2. injections
    while (next_scheduled < ordered.size() && ordered[next_scheduled]->tick <= tick) {
      const ScheduledTx& s = *ordered[next_scheduled++];
      NodeState& node = result.nodes[s.node];
      node.add_transaction(s.tx);
      result.events.push_back({tick, s.node, "inject", s.tx.hash()});
      net.send_tx(s.node, s.tx, tick);
    }

    // 3. proposals by whoever is due on its own tip
    for (NodeState& node : result.nodes) {
      const Authority& due = authorities.set.proposer_for(node.height() + 1);
      if (due.node_id != node.id()) continue;
      auto block = node.propose(due, authorities.keys[node.id()],
                                static_cast<std::int64_t>(tick) * kTickMillis,
                                config.work_bits, config.max_block_txs);
      if (!block) continue;
      result.events.push_back({tick, node.id(), "propose", block->hash()});
      net.send_chain(node, tick);
    }

    // 4. anti-entropy
    if (config.retransmit_every > 0 && tick % config.retransmit_every == 0) {
      for (NodeState& node : result.nodes) {
        if (node.height() > 0) net.send_chain(node, tick);
        for (const auto& [hash, t] : node.mempool()) net.send_tx(node.id(), t, tick);
      }
    }
  }
  return result;
}

}  // namespace evault
