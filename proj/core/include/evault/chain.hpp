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

#ifndef EVAULT_CHAIN_HPP_
#define EVAULT_CHAIN_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "evault/authority.hpp"
#include "evault/block.hpp"

namespace evault {

enum class BlockCheck {
  Ok,
  BadParent,
  BadHeight,
  BadMerkleRoot,
  BadTimestamp,
  WrongProposer,
  BadSignature,
  InsufficientWork,
};

std::string_view check_name(BlockCheck check);

unsigned leading_zero_bits(const Hash256& h);

/// Seals txs on top of parent. With work_bits > 0 the header nonce is ground
/// until the block hash has that many leading zero bits.
/// Throws Error(EmptyTransactionList) or Error(ClockRegression).
Block build_block(const BlockHeader& parent, std::vector<Transaction> txs,
                  const Uid& proposer, std::int64_t timestamp,
                  const SigningKey& signer, unsigned work_bits = 0);

/// Runs the checks in declaration order of BlockCheck and reports the first
/// failure.
BlockCheck validate_block(const Block& block, const BlockHeader& parent,
                          const Authority& expected, unsigned work_bits);

struct ChainVerdict {
  std::optional<std::uint64_t> first_invalid_height;  // nullopt means OK
  BlockCheck reason = BlockCheck::Ok;

  bool ok() const { return !first_invalid_height.has_value(); }
};

/// Structural validation of a whole chain under the round-robin schedule.
/// Positions, not claimed heights, define where a block should sit, so the
/// reported height is the index of the first failing block.
/// Throws Error(NotGenesis) if blocks is empty or blocks[0] is not genesis.
ChainVerdict verify_chain(std::span<const Block> blocks,
                          const AuthoritySet& authorities, unsigned work_bits);

}  // namespace evault

#endif  // EVAULT_CHAIN_HPP_
