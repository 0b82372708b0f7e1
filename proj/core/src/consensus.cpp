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

#include "evault/consensus.hpp"

#include <algorithm>
#include <tuple>

#include "evault/error.hpp"

namespace evault {

bool fork_preferred(const Chain& current, const Chain& candidate) {
  if (candidate.size() != current.size()) return candidate.size() > current.size();
  if (candidate.empty()) return false;
  return candidate.back().hash() < current.back().hash();
}

const Chain& choose_fork(const Chain& current, const Chain& candidate,
                         const AuthoritySet& authorities, unsigned work_bits) {
  ChainVerdict verdict;
  try {
    verdict = verify_chain(candidate, authorities, work_bits);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidChain, std::string("candidate chain: ") + e.what());
  }
  if (!verdict.ok()) {
    throw Error(ErrorCode::InvalidChain,
                "candidate chain invalid at height " +
                    std::to_string(*verdict.first_invalid_height) + " (" +
                    std::string(check_name(verdict.reason)) + ")");
  }
  return fork_preferred(current, candidate) ? candidate : current;
}

NodeState::NodeState(std::uint32_t node_id) : id_(node_id), chain_{genesis_block()} {}

bool NodeState::add_transaction(const Transaction& tx) {
  if (tx.nonce <= world_.last_nonce(tx.sender)) return false;
  return mempool_.emplace(tx.hash(), tx).second;
}

void NodeState::prune_mempool() {
  for (auto it = mempool_.begin(); it != mempool_.end();) {
    if (it->second.nonce <= world_.last_nonce(it->second.sender)) {
      it = mempool_.erase(it);
    } else {
      ++it;
    }
  }
}

bool NodeState::offer_chain(const Chain& candidate, const AuthoritySet& authorities,
                            unsigned work_bits) {
  if (!fork_preferred(chain_, candidate)) return false;
  if (candidate.empty() || candidate.front() != genesis_block()) return false;

  std::size_t common = 1;
  const std::size_t limit = std::min(chain_.size(), candidate.size());
  while (common < limit && chain_[common].hash() == candidate[common].hash()) {
    ++common;
  }
  for (std::size_t i = common; i < candidate.size(); ++i) {
    if (validate_block(candidate[i], candidate[i - 1].header,
                       authorities.proposer_for(i), work_bits) != BlockCheck::Ok) {
      return false;
    }
  }

  // Extending our own tip only needs the new suffix applied; a reorg replays
  // from genesis.
  const bool extends = common == chain_.size();
  WorldState next = extends ? world_ : WorldState{};
  for (std::size_t i = extends ? common : 1; i < candidate.size(); ++i) {
    if (apply_block(next, candidate[i])) return false;
  }

  std::vector<Transaction> abandoned;
  for (std::size_t i = common; i < chain_.size(); ++i) {
    abandoned.insert(abandoned.end(), chain_[i].transactions.begin(),
                     chain_[i].transactions.end());
  }
  chain_ = candidate;
  world_ = std::move(next);
  for (const Transaction& t : abandoned) mempool_.emplace(t.hash(), t);
  prune_mempool();
  return true;
}

std::optional<Block> NodeState::propose(const Authority& self, const SigningKey& key,
                                        std::int64_t timestamp, unsigned work_bits,
                                        std::size_t max_txs) {
  if (mempool_.empty() || max_txs == 0) return std::nullopt;
  std::vector<const Transaction*> pending;
  pending.reserve(mempool_.size());
  for (const auto& [hash, t] : mempool_) pending.push_back(&t);
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Transaction* a, const Transaction* b) {
                     return std::tie(a->submitted_at, a->sender, a->nonce) <
                            std::tie(b->submitted_at, b->sender, b->nonce);
                   });

  const std::uint64_t height = this->height() + 1;
  WorldState scratch = world_;
  std::vector<Transaction> picked;
  std::vector<bool> used(pending.size(), false);
  // Repeated passes let a transaction follow one it depends on (for example
  // a registration and the new identity's first action) in the same block.
  bool progress = true;
  while (progress && picked.size() < max_txs) {
    progress = false;
    for (std::size_t i = 0; i < pending.size() && picked.size() < max_txs; ++i) {
      if (used[i]) continue;
      if (!apply_transaction_in_place(scratch, *pending[i], height)) {
        used[i] = true;
        picked.push_back(*pending[i]);
        progress = true;
      }
    }
  }
  if (picked.empty()) return std::nullopt;

  const std::int64_t ts = std::max(timestamp, tip().header.timestamp);
  Block block =
      build_block(tip().header, std::move(picked), self.proposer, ts, key, work_bits);
  chain_.push_back(block);
  world_ = std::move(scratch);
  prune_mempool();
  return block;
}

void NodeState::reset(Chain chain, WorldState world) {
  chain_ = std::move(chain);
  world_ = std::move(world);
  prune_mempool();
}

}  // namespace evault
