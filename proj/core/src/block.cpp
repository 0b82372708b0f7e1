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

#include "evault/block.hpp"

#include "evault/encoding.hpp"

namespace evault {

void BlockHeader::encode(Encoder& enc) const {
  enc.u64(height).hash(parent_hash).hash(merkle_root).i64(timestamp)
      .hash(proposer.value).u64(nonce);
}

BlockHeader BlockHeader::decode(Decoder& dec) {
  BlockHeader h;
  h.height = dec.u64();
  h.parent_hash = dec.hash();
  h.merkle_root = dec.hash();
  h.timestamp = dec.i64();
  h.proposer.value = dec.hash();
  h.nonce = dec.u64();
  return h;
}

Hash256 BlockHeader::hash() const {
  Encoder enc;
  encode(enc);
  return keccak256(enc.buffer());
}

std::vector<Hash256> Block::transaction_hashes() const {
  std::vector<Hash256> out;
  out.reserve(transactions.size());
  for (const Transaction& t : transactions) out.push_back(t.hash());
  return out;
}

void Block::encode(Encoder& enc) const {
  header.encode(enc);
  enc.count(transactions.size());
  for (const Transaction& t : transactions) t.encode(enc);
  enc.raw(signature.bytes);
}

Block Block::decode(Decoder& dec) {
  Block b;
  b.header = BlockHeader::decode(dec);
  std::size_t n = dec.count();
  b.transactions.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.transactions.push_back(Transaction::decode(dec));
  }
  b.signature.bytes = dec.raw<64>();
  return b;
}

Bytes Block::encode() const {
  Encoder enc;
  encode(enc);
  return enc.take();
}

Block Block::decode(ByteView data) {
  Decoder dec(data);
  Block b = decode(dec);
  dec.finish();
  return b;
}

const Block& genesis_block() {
  static const Block kGenesis{};
  return kGenesis;
}

}  // namespace evault
