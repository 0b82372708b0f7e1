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

#include "evault/merkle.hpp"

#include <string>

#include "evault/error.hpp"

namespace evault {
namespace {

std::vector<Hash256> next_level(const std::vector<Hash256>& level) {
  std::vector<Hash256> up;
  up.reserve((level.size() + 1) / 2);
  for (std::size_t i = 0; i < level.size(); i += 2) {
    const Hash256& left = level[i];
    const Hash256& right = i + 1 < level.size() ? level[i + 1] : level[i];
    up.push_back(merkle_parent(left, right));
  }
  return up;
}

}  // namespace

Hash256 merkle_parent(const Hash256& left, const Hash256& right) {
  std::array<std::uint8_t, 64> joined{};
  std::copy(left.bytes.begin(), left.bytes.end(), joined.begin());
  std::copy(right.bytes.begin(), right.bytes.end(), joined.begin() + 32);
  return keccak256(joined);
}

Hash256 merkle_root(std::span<const Hash256> leaves) {
  if (leaves.empty()) {
    throw Error(ErrorCode::EmptyLeafSet, "merkle_root of an empty leaf set");
  }
  std::vector<Hash256> level(leaves.begin(), leaves.end());
  while (level.size() > 1) level = next_level(level);
  return level.front();
}

MerkleProof merkle_prove(std::span<const Hash256> leaves, std::size_t index) {
  if (index >= leaves.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "leaf index " + std::to_string(index) + " out of range for " +
                    std::to_string(leaves.size()) + " leaves");
  }
  MerkleProof proof;
  proof.leaf_index = index;
  std::vector<Hash256> level(leaves.begin(), leaves.end());
  std::size_t pos = index;
  while (level.size() > 1) {
    if (pos % 2 == 0) {
      const Hash256& sibling =
          pos + 1 < level.size() ? level[pos + 1] : level[pos];
      proof.siblings.push_back({sibling, SiblingSide::Right});
    } else {
      proof.siblings.push_back({level[pos - 1], SiblingSide::Left});
    }
    level = next_level(level);
    pos /= 2;
  }
  return proof;
}

bool merkle_verify(const Hash256& leaf, const MerkleProof& proof,
                   const Hash256& root) {
  if (proof.siblings.size() < 64 &&
      (proof.leaf_index >> proof.siblings.size()) != 0) {
    return false;
  }
  Hash256 acc = leaf;
  std::size_t pos = proof.leaf_index;
  for (const MerkleSibling& s : proof.siblings) {
    bool expect_right = pos % 2 == 0;
    if ((s.side == SiblingSide::Right) != expect_right) return false;
    acc = expect_right ? merkle_parent(acc, s.hash) : merkle_parent(s.hash, acc);
    pos /= 2;
  }
  return acc == root;
}

}  // namespace evault
