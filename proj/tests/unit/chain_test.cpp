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

#include <random>

#include <gtest/gtest.h>

#include "evault/authority.hpp"
#include "evault/consensus.hpp"
#include "evault/error.hpp"
#include "fixture.hpp"

namespace evault {
namespace {

class ChainTest : public ::testing::Test {
 protected:
  SimulatedAuthorities auth = simulation_authorities(4);
  std::mt19937_64 rng{99};
};

TEST_F(ChainTest, GenesisConstant) {
  const Block& g = genesis_block();
  EXPECT_EQ(g.header.height, 0u);
  EXPECT_TRUE(g.header.parent_hash.is_zero());
  EXPECT_TRUE(g.header.merkle_root.is_zero());
  EXPECT_EQ(g.header.timestamp, 0);
  EXPECT_TRUE(g.transactions.empty());
  EXPECT_EQ(&genesis_block(), &g);
  const std::vector<Block> only{g};
  EXPECT_TRUE(verify_chain(only, auth.set, 0).ok());
}

TEST_F(ChainTest, ExpectedProposerRoundRobin) {
  EXPECT_EQ(expected_proposer(5, auth.set), 0u);
  EXPECT_EQ(expected_proposer(1, auth.set), 0u);
  EXPECT_EQ(expected_proposer(2, auth.set), 1u);
  EXPECT_EQ(expected_proposer(4, auth.set), 3u);
  const SimulatedAuthorities solo = simulation_authorities(1);
  for (std::uint64_t h = 1; h < 10; ++h) EXPECT_EQ(expected_proposer(h, solo.set), 0u);
}

TEST_F(ChainTest, BuildThenValidate) {
  auto chain = testing::build_signed_chain(5, auth, rng);
  EXPECT_EQ(chain[5].header.height, 5u);
  EXPECT_EQ(chain[5].header.parent_hash, chain[4].hash());
  for (std::size_t h = 1; h < chain.size(); ++h) {
    EXPECT_EQ(validate_block(chain[h], chain[h - 1].header, auth.set.proposer_for(h), 0),
              BlockCheck::Ok);
  }
}

TEST_F(ChainTest, BuildRejectsEmptyAndRegressingBlocks) {
  auto chain = testing::build_signed_chain(1, auth, rng);
  const Authority& next = auth.set.proposer_for(2);
  try {
    build_block(chain[1].header, {}, next.proposer, 1000, auth.keys[next.node_id]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyTransactionList);
  }
  try {
    build_block(chain[1].header, chain[1].transactions, next.proposer,
                chain[1].header.timestamp - 1, auth.keys[next.node_id]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ClockRegression);
  }
}

TEST_F(ChainTest, ValidateDetectsEachFault) {
  auto chain = testing::build_signed_chain(2, auth, rng);
  const Authority& who = auth.set.proposer_for(2);
  const BlockHeader& parent = chain[1].header;

  Block b = chain[2];
  b.header.parent_hash = Hash256{};
  EXPECT_EQ(validate_block(b, parent, who, 0), BlockCheck::BadParent);

  b = chain[2];
  b.header.height = 7;
  EXPECT_EQ(validate_block(b, parent, who, 0), BlockCheck::BadHeight);

  b = chain[2];
  b.transactions[0].nonce ^= 1;
  EXPECT_EQ(validate_block(b, parent, who, 0), BlockCheck::BadMerkleRoot);

  b = chain[2];
  b.header.timestamp = parent.timestamp - 1;
  EXPECT_EQ(validate_block(b, parent, who, 0), BlockCheck::BadTimestamp);

  EXPECT_EQ(validate_block(chain[2], parent, auth.set.proposer_for(3), 0),
            BlockCheck::WrongProposer);

  b = chain[2];
  b.signature.bytes[0] ^= 1;
  EXPECT_EQ(validate_block(b, parent, who, 0), BlockCheck::BadSignature);
}

TEST_F(ChainTest, WorkTargetIsEnforced) {
  auto chain = testing::build_signed_chain(3, auth, rng, 8);
  EXPECT_TRUE(verify_chain(chain, auth.set, 8).ok());
  for (std::size_t h = 1; h < chain.size(); ++h) {
    EXPECT_GE(leading_zero_bits(chain[h].hash()), 8u);
  }
  auto plain = testing::build_signed_chain(3, auth, rng, 0);
  const ChainVerdict v = verify_chain(plain, auth.set, 20);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.reason, BlockCheck::InsufficientWork);
}

TEST_F(ChainTest, TenBlockChainAndPayloadByteFlip) {
  auto chain = testing::build_signed_chain(10, auth, rng);
  EXPECT_TRUE(verify_chain(chain, auth.set, 0).ok());
  chain[4].transactions[0].submitted_at ^= 0x100;
  const ChainVerdict v = verify_chain(chain, auth.set, 0);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(*v.first_invalid_height, 4u);
  EXPECT_EQ(v.reason, BlockCheck::BadMerkleRoot);
}

TEST_F(ChainTest, NotGenesisThrows) {
  auto chain = testing::build_signed_chain(2, auth, rng);
  const std::vector<Block> headless(chain.begin() + 1, chain.end());
  EXPECT_THROW(verify_chain(headless, auth.set, 0), Error);
  EXPECT_THROW(verify_chain(std::vector<Block>{}, auth.set, 0), Error);
}

TEST_F(ChainTest, AnyDecodableByteMutationIsLocalisedExactly) {
  auto chain = testing::build_signed_chain(8, auth, rng);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t i = 1 + rng() % 8;
    auto copy = chain;
    copy[i] = testing::mutate_block(copy[i], rng);
    const ChainVerdict v = verify_chain(copy, auth.set, 0);
    ASSERT_FALSE(v.ok());
    ASSERT_EQ(*v.first_invalid_height, i) << "reason " << check_name(v.reason);
  }
}

TEST_F(ChainTest, AcceptedChainsHaveMonotoneTimestamps) {
  auto chain = testing::build_signed_chain(12, auth, rng);
  ASSERT_TRUE(verify_chain(chain, auth.set, 0).ok());
  for (std::size_t h = 1; h < chain.size(); ++h) {
    EXPECT_LE(chain[h - 1].header.timestamp, chain[h].header.timestamp);
  }
}

TEST(BlockEncodingTest, RoundTrip) {
  auto auth = simulation_authorities(2);
  std::mt19937_64 rng(3);
  auto chain = testing::build_signed_chain(3, auth, rng);
  for (const Block& b : chain) EXPECT_EQ(Block::decode(b.encode()), b);
}

}  // namespace
}  // namespace evault
