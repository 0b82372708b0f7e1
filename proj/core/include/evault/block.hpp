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

#ifndef EVAULT_BLOCK_HPP_
#define EVAULT_BLOCK_HPP_

#include <cstdint>
#include <vector>

#include "evault/hash.hpp"
#include "evault/identity.hpp"
#include "evault/transaction.hpp"

namespace evault {

struct BlockHeader {
  std::uint64_t height = 0;
  Hash256 parent_hash;
  Hash256 merkle_root;
  std::int64_t timestamp = 0;  // ms since Unix epoch, proposer clock
  Uid proposer;
  std::uint64_t nonce = 0;  // only meaningful when a work target is set

  void encode(Encoder& enc) const;
  static BlockHeader decode(Decoder& dec);
  /// keccak256 of the canonical header encoding; this is "the block hash".
  Hash256 hash() const;

  friend bool operator==(const BlockHeader&, const BlockHeader&) = default;
};

struct Block {
  BlockHeader header;
  std::vector<Transaction> transactions;
  Signature signature;  // proposer's signature over header.hash()

  Hash256 hash() const { return header.hash(); }
  std::vector<Hash256> transaction_hashes() const;

  void encode(Encoder& enc) const;
  static Block decode(Decoder& dec);
  Bytes encode() const;
  static Block decode(ByteView data);

  friend bool operator==(const Block&, const Block&) = default;
};

/// Height 0, zero parent, zero Merkle root, timestamp 0, zero proposer,
/// no transactions, zero signature. Shared by every node.
const Block& genesis_block();

}  // namespace evault

#endif  // EVAULT_BLOCK_HPP_
