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

#include <benchmark/benchmark.h>

#include "evault/chain.hpp"
#include "evault/contracts.hpp"
#include "evault/transaction.hpp"

namespace evault {
namespace {

struct Member {
  IdentityDetails details;
  SigningKey key;
  Uid uid;
  std::uint64_t nonce = 0;
};

Member member(const std::string& name, Role role) {
  IdentityDetails d{name, "NID-" + name, role, name + "@bench.test"};
  return {d, SigningKey::from_seed(keccak256("bench/" + name).bytes), derive_uid(d)};
}

/// One upload per transaction after a short setup; every transaction valid.
std::vector<Transaction> workload(std::size_t uploads) {
  std::vector<Transaction> txs;
  Member reg = member("registrar", Role::Registrar);
  auto send = [&](Member& from, TxPayload p) {
    txs.push_back(make_transaction(std::move(p), from.uid, ++from.nonce, 0, from.key));
  };
  send(reg, tx::RegisterIdentity{reg.details, reg.key.verify_key()});
  Member judge = member("judge", Role::Judge);
  Member lawyer = member("lawyer", Role::Lawyer);
  Member a = member("a", Role::Citizen);
  Member b = member("b", Role::Citizen);
  for (Member* m : {&judge, &lawyer, &a, &b}) {
    send(reg, tx::RegisterIdentity{m->details, m->key.verify_key()});
  }
  send(reg, tx::FileCase{"civil", a.uid, b.uid, {lawyer.uid}});
  const Hash256 case_id = txs.back().hash();
  for (std::size_t i = 0; i < uploads; ++i) {
    const Hash256 h = keccak256("doc " + std::to_string(i));
    send(lawyer, tx::UploadDocument{case_id, "doc", h, h, 10});
  }
  return txs;
}

std::vector<Block> seal(const std::vector<Transaction>& txs, std::size_t per_block) {
  const SigningKey key = SigningKey::from_seed(keccak256("bench-authority").bytes);
  const Uid proposer{keccak256("bench-authority")};
  std::vector<Block> chain = {genesis_block()};
  for (std::size_t i = 0; i < txs.size(); i += per_block) {
    std::vector<Transaction> batch(txs.begin() + static_cast<std::ptrdiff_t>(i),
                                   txs.begin() + static_cast<std::ptrdiff_t>(std::min(txs.size(), i + per_block)));
    chain.push_back(build_block(chain.back().header, std::move(batch), proposer,
                                static_cast<std::int64_t>(chain.size()), key));
  }
  return chain;
}

void BM_ApplyTransaction(benchmark::State& state) {
  const auto txs = workload(1);
  WorldState base;
  for (std::size_t i = 0; i + 1 < txs.size(); ++i) apply_transaction_in_place(base, txs[i], i + 1);
  for (auto _ : state) {
    WorldState s = base;
    benchmark::DoNotOptimize(apply_transaction_in_place(s, txs.back(), txs.size()));
  }
}
BENCHMARK(BM_ApplyTransaction);

void BM_ReplayChain(benchmark::State& state) {
  const auto chain = seal(workload(static_cast<std::size_t>(state.range(0))), 50);
  std::size_t count = 0;
  for (const Block& b : chain) count += b.transactions.size();
  for (auto _ : state) benchmark::DoNotOptimize(replay_chain(chain));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
}
BENCHMARK(BM_ReplayChain)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BuildBlock(benchmark::State& state) {
  const auto txs = workload(static_cast<std::size_t>(state.range(0)));
  const SigningKey key = SigningKey::from_seed(keccak256("bench-authority").bytes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        build_block(genesis_block().header, txs, Uid{keccak256("p")}, 1, key));
  }
}
BENCHMARK(BM_BuildBlock)->Arg(10)->Arg(100);

void BM_VerifyChain(benchmark::State& state) {
  const auto chain = seal(workload(400), 20);
  const SigningKey key = SigningKey::from_seed(keccak256("bench-authority").bytes);
  const AuthoritySet set({Authority{0, Uid{keccak256("bench-authority")}, key.verify_key()}});
  for (auto _ : state) benchmark::DoNotOptimize(verify_chain(chain, set, 0));
}
BENCHMARK(BM_VerifyChain)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace evault
