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

#include <random>

#include <gtest/gtest.h>

#include "evault/contracts.hpp"
#include "fixture.hpp"
#include "traffic.hpp"

namespace evault {
namespace {

struct Trace {
  std::vector<Transaction> txs;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

// Generates traffic against a live state and checks the per-step properties
// on the way.
Trace run_traffic(std::uint64_t seed, std::size_t count) {
  testing::LedgerFixture f;
  testing::TrafficGenerator gen(f, seed);
  Trace trace;
  trace.txs = f.accepted;
  std::map<Uid, std::uint64_t> last_nonce;
  for (const Transaction& t : trace.txs) last_nonce[t.sender] = t.nonce;
  for (std::size_t i = 0; i < count; ++i) {
    const Transaction tx = gen.next(f.state);
    const Bytes before = f.state.encode();
    const ApplyResult pure = apply_transaction(f.state, tx, f.height + 1);
    auto rej = f.apply(tx);
    EXPECT_EQ(rej.has_value(), !pure.ok());
    trace.txs.push_back(tx);
    if (rej) {
      ++trace.rejected;
      EXPECT_EQ(f.state.encode(), before) << "rejected tx mutated state: " << error_name(rej->code);
      EXPECT_EQ(pure.state.encode(), before);
    } else {
      ++trace.accepted;
      EXPECT_EQ(pure.state, f.state);
      EXPECT_GT(tx.nonce, last_nonce[tx.sender]);
      last_nonce[tx.sender] = tx.nonce;
    }
    const std::string broken = testing::check_state_invariants(f.state);
    EXPECT_TRUE(broken.empty()) << broken << " after tx " << i;
  }
  return trace;
}

WorldState fold(const std::vector<Transaction>& txs) {
  WorldState s;
  std::uint64_t height = 0;
  for (const Transaction& t : txs) {
    if (!apply_transaction_in_place(s, t, height + 1)) ++height;
  }
  return s;
}

TEST(ContractsProperty, RandomTrafficKeepsInvariantsAndRejectionsPure) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Trace t = run_traffic(seed, 400);
    EXPECT_GT(t.accepted, 100u) << "seed " << seed;
    EXPECT_GT(t.rejected, 50u) << "seed " << seed;
  }
}

TEST(ContractsProperty, ReplayIsByteIdentical) {
  const Trace t = run_traffic(77, 300);
  const Bytes a = fold(t.txs).encode();
  const Bytes b = fold(t.txs).encode();
  EXPECT_EQ(a, b);
}

TEST(ContractsProperty, ReplayingAcceptedTransactionsIsRejected) {
  testing::LedgerFixture f;
  testing::TrafficGenerator gen(f, 5);
  for (int i = 0; i < 200; ++i) f.apply(gen.next(f.state));
  for (const Transaction& t : f.accepted) {
    auto rej = apply_transaction(f.state, t, f.height + 1).rejection;
    ASSERT_TRUE(rej.has_value());
    EXPECT_TRUE(rej->code == ErrorCode::BadNonce || rej->code == ErrorCode::BadSignature)
        << error_name(rej->code);
  }
}

TEST(ContractsProperty, PermissionMatrixExhaustive) {
  testing::LedgerFixture f;
  auto& judge = f.add("m-judge", Role::Judge);
  auto& other_judge = f.add("m-judge-2", Role::Judge);
  auto& counsel = f.add("m-counsel", Role::Lawyer);
  auto& other_lawyer = f.add("m-lawyer", Role::Lawyer);
  auto& party = f.add("m-party", Role::Citizen);
  auto& other_party = f.add("m-party-2", Role::Citizen);
  auto& bystander = f.add("m-bystander", Role::Citizen);
  const Hash256 c1 = f.file_case("civil", party, other_party, {&counsel});
  const Hash256 doc = f.upload(counsel, c1, "d", "d");
  f.must(counsel, tx::GrantAccess{doc, bystander.uid});
  const Case& c = *f.state.find_case(c1);
  ASSERT_EQ(c.judge, judge.uid);
  (void)other_judge;
  (void)other_lawyer;

  for (const auto& [uid, id] : f.state.identities) {
    for (Action a : kAllActions) {
      const bool registrar_action = a == Action::RegisterIdentity || a == Action::FileCase;
      const bool case_action = a == Action::ScheduleHearing || a == Action::UpdateCaseStatus ||
                               a == Action::UploadDocument;
      const std::optional<Hash256> res =
          registrar_action ? std::nullopt : std::optional<Hash256>(case_action ? c1 : doc);
      const bool judge_here = id.role == Role::Judge && c.judge == uid;
      const bool counsel_here = id.role == Role::Lawyer && c.lawyers.count(uid);
      const bool party_here = id.role == Role::Citizen && (c.petitioner == uid || c.defendant == uid);
      bool want = false;
      switch (a) {
        case Action::RegisterIdentity:
        case Action::FileCase:
          want = id.role == Role::Registrar;
          break;
        case Action::ScheduleHearing:
        case Action::UpdateCaseStatus:
        case Action::RevokeAccess:
          want = judge_here;
          break;
        case Action::GrantAccess:
          want = judge_here || counsel_here;
          break;
        case Action::UploadDocument:
        case Action::TransferCustody:
          want = counsel_here;
          break;
        case Action::SignDocument:
          want = counsel_here || party_here;
          break;
        case Action::ReadDocument:
          want = judge_here || counsel_here || uid == bystander.uid;
          break;
        case Action::ModifyDocument:
          want = false;
          break;
      }
      EXPECT_EQ(check_permission(f.state, uid, a, res), want)
          << role_name(id.role) << " " << action_name(a);
    }
  }
}

}  // namespace
}  // namespace evault
