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

#ifndef EVAULT_MERKLE_HPP_
#define EVAULT_MERKLE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "evault/hash.hpp"

namespace evault {

/// Binary Merkle tree over Keccak-256: parent = keccak256(left || right),
/// an odd node at any level is paired with itself, and a single leaf is its
/// own root.
enum class SiblingSide { Left, Right };

struct MerkleSibling {
  Hash256 hash;
  SiblingSide side;

  friend bool operator==(const MerkleSibling&, const MerkleSibling&) = default;
};

struct MerkleProof {
  std::size_t leaf_index = 0;
  std::vector<MerkleSibling> siblings;  // leaf level first
};

Hash256 merkle_parent(const Hash256& left, const Hash256& right);

/// Throws Error(EmptyLeafSet) for an empty list.
Hash256 merkle_root(std::span<const Hash256> leaves);

/// Throws Error(IndexOutOfRange) unless index < leaves.size().
MerkleProof merkle_prove(std::span<const Hash256> leaves, std::size_t index);

/// Never throws. Rejects proofs whose side flags disagree with leaf_index.
bool merkle_verify(const Hash256& leaf, const MerkleProof& proof,
                   const Hash256& root);

}  // namespace evault

#endif  // EVAULT_MERKLE_HPP_
