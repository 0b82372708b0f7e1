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

#include "evault/chain.hpp"

#include <bit>
#include <limits>

#include "evault/error.hpp"
#include "evault/merkle.hpp"

namespace evault {

std::string_view check_name(BlockCheck check) {
  switch (check) {
    case BlockCheck::Ok:
      return "Ok";
    case BlockCheck::BadParent:
      return "BadParent";
    case BlockCheck::BadHeight:
      return "BadHeight";
    case BlockCheck::BadMerkleRoot:
      return "BadMerkleRoot";
    case BlockCheck::BadTimestamp:
      return "BadTimestamp";
    case BlockCheck::WrongProposer:
      return "WrongProposer";
    case BlockCheck::BadSignature:
      return "BadSignature";
    case BlockCheck::InsufficientWork:
      return "InsufficientWork";
  }
  return "Unknown";
}

unsigned leading_zero_bits(const Hash256& h) {
  unsigned bits = 0;
  for (std::uint8_t b : h.bytes) {
    if (b == 0) {
      bits += 8;
      continue;
    }
    return bits + static_cast<unsigned>(std::countl_zero(b));
  }
  return bits;
}

Block build_block(const BlockHeader& parent, std::vector<Transaction> txs,
                  const Uid& proposer, std::int64_t timestamp,
                  const SigningKey& signer, unsigned work_bits) {
  if (txs.empty()) {
    throw Error(ErrorCode::EmptyTransactionList,
                "only genesis may have an empty transaction list");
  }
  if (timestamp < parent.timestamp) {
    throw Error(ErrorCode::ClockRegression,
                "timestamp " + std::to_string(timestamp) +
                    " precedes parent timestamp " +
                    std::to_string(parent.timestamp));
  }
  Block block;
  block.transactions = std::move(txs);
  block.header.height = parent.height + 1;
  block.header.parent_hash = parent.hash();
  block.header.merkle_root = merkle_root(block.transaction_hashes());
  block.header.timestamp = timestamp;
  block.header.proposer = proposer;
  block.header.nonce = 0;
  if (work_bits > 0) {
    while (leading_zero_bits(block.header.hash()) < work_bits) {
      ++block.header.nonce;
    }
  }
  block.signature = signer.sign(block.header.hash().bytes);
  return block;
}

BlockCheck validate_block(const Block& block, const BlockHeader& parent,
                          const Authority& expected, unsigned work_bits) {
  const BlockHeader& h = block.header;
  if (h.parent_hash != parent.hash()) return BlockCheck::BadParent;
  if (parent.height == std::numeric_limits<std::uint64_t>::max() ||
      h.height != parent.height + 1) {
    return BlockCheck::BadHeight;
  }
  if (block.transactions.empty() ||
      h.merkle_root != merkle_root(block.transaction_hashes())) {
    return BlockCheck::BadMerkleRoot;
  }
  if (h.timestamp < parent.timestamp) return BlockCheck::BadTimestamp;
  if (h.proposer != expected.proposer) return BlockCheck::WrongProposer;
  Hash256 header_hash = h.hash();
  if (!verify(expected.key, header_hash.bytes, block.signature)) {
    return BlockCheck::BadSignature;
  }
  if (work_bits > 0 && leading_zero_bits(header_hash) < work_bits) {
    return BlockCheck::InsufficientWork;
  }
  return BlockCheck::Ok;
}

ChainVerdict verify_chain(std::span<const Block> blocks,
                          const AuthoritySet& authorities, unsigned work_bits) {
  if (blocks.empty() || blocks.front() != genesis_block()) {
    throw Error(ErrorCode::NotGenesis, "chain does not start at genesis");
  }
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const Authority& expected = authorities.proposer_for(i);
    BlockCheck check =
        validate_block(blocks[i], blocks[i - 1].header, expected, work_bits);
    if (check != BlockCheck::Ok) {
      return {static_cast<std::uint64_t>(i), check};
    }
  }
  return {};
}

}  // namespace evault
