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

// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// wall-clock limit. Exit status is the number of failed criteria.

#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "evault/block_log.hpp"
#include "evault/chain.hpp"
#include "evault/consensus.hpp"
#include "evault/contracts.hpp"
#include "evault/error.hpp"
#include "evault/filestore.hpp"
#include "evault/hash.hpp"
#include "evault/service.hpp"
#include "fixture.hpp"
#include "traffic.hpp"

namespace evault {
namespace {

namespace fs = std::filesystem;
using testing::Actor;
using testing::LedgerFixture;

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Collects the first few mismatches of a criterion.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, std::to_string(failures_) + "/" + std::to_string(checks_) +
                       " checks failed: " + first_};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

// ---------------------------------------------------------------------------

Outcome hash_vectors() {
  Checker c;
  c.expect(keccak256("").hex() ==
               "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470",
           "keccak256(\"\") = " + keccak256("").hex());
  c.expect(keccak256("abc").hex() ==
               "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45",
           "keccak256(\"abc\") = " + keccak256("abc").hex());
  return c.done("empty string and \"abc\" match the published Keccak-256 digests");
}

struct CaseFixture {
  CaseFixture() {
    judge = &f.add("a-judge", Role::Judge);
    lawyer = &f.add("a-lawyer", Role::Lawyer);
    p1 = &f.add("a-pet", Role::Citizen);
    p2 = &f.add("a-def", Role::Citizen);
    case_id = f.file_case("civil", *p1, *p2, {lawyer});
  }
  LedgerFixture f;
  Actor *judge, *lawyer, *p1, *p2;
  Hash256 case_id;
};

Outcome tamper_detection() {
  constexpr int kTrials = 1000;
  CaseFixture fx;
  std::mt19937_64 rng(1001);
  Checker c;
  int flipped = 0, unflipped = 0;
  for (int t = 0; t < kTrials; ++t) {
    const Bytes doc = testing::random_bytes(rng, 1 + rng() % 8192);
    fx.f.must(*fx.lawyer, tx::UploadDocument{fx.case_id, "doc", keccak256(doc),
                                             keccak256("m" + std::to_string(t)), doc.size()});
    const Hash256 id = fx.f.accepted.back().hash();
    const bool flip = (rng() & 1) != 0;
    Bytes probe = doc;
    if (flip) {
      const std::size_t bit = rng() % (probe.size() * 8);
      probe[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
      ++flipped;
      c.expect(verify_document(fx.f.state, id, probe) == DocumentVerdict::Tampered,
               "flipped trial " + std::to_string(t) + " not Tampered");
    } else {
      ++unflipped;
      c.expect(verify_document(fx.f.state, id, probe) == DocumentVerdict::Match,
               "unflipped trial " + std::to_string(t) + " not Match");
    }
  }
  return c.done(std::to_string(flipped) + " flipped all Tampered, " + std::to_string(unflipped) +
                " unflipped all Match");
}

Outcome chain_localization() {
  constexpr int kTrials = 200;
  constexpr std::size_t kLength = 20;
  const SimulatedAuthorities auth = simulation_authorities(4);
  std::mt19937_64 rng(2002);
  Checker c;
  std::set<std::uint64_t> heights;
  for (int t = 0; t < kTrials; ++t) {
    std::vector<Block> chain = testing::build_signed_chain(kLength, auth, rng);
    const std::uint64_t i = 1 + rng() % kLength;
    heights.insert(i);
    chain[i] = testing::mutate_block(chain[i], rng);
    const ChainVerdict v = verify_chain(chain, auth.set, 0);
    c.expect(v.first_invalid_height == i,
             "mutation at " + std::to_string(i) + " reported at " +
                 (v.first_invalid_height ? std::to_string(*v.first_invalid_height) : "none"));
  }
  return c.done(std::to_string(kTrials) + " trials over " + std::to_string(heights.size()) +
                " distinct heights all localised");
}

Outcome permission_matrix() {
  // Four identities (one per role) and two cases. Case A: petitioner citizen,
  // defendant registrar, counsel lawyer. Case B: petitioner registrar,
  // defendant lawyer, no counsel. Docs A1 (citizen granted) and A2 on case A.
  LedgerFixture f;
  Actor& registrar = f.registrar();
  Actor& judge = f.add("m-judge", Role::Judge);
  Actor& lawyer = f.add("m-lawyer", Role::Lawyer);
  Actor& citizen = f.add("m-citizen", Role::Citizen);
  const Hash256 case_a = f.file_case("civil", citizen, registrar, {&lawyer});
  const Hash256 case_b = f.file_case("land", registrar, lawyer, {});
  const Hash256 doc_a1 = f.upload(lawyer, case_a, "a1", "first");
  const Hash256 doc_a2 = f.upload(lawyer, case_a, "a2", "second");
  f.must(lawyer, tx::GrantAccess{doc_a1, citizen.uid});

  struct Rel {
    std::set<Uid> judges, counsel, parties, acl;
  };
  const Rel rel_a{{judge.uid}, {lawyer.uid}, {citizen.uid, registrar.uid}, {}};
  const Rel rel_b{{judge.uid}, {}, {registrar.uid, lawyer.uid}, {}};
  std::map<Hash256, Rel> doc_rel = {{doc_a1, rel_a}, {doc_a2, rel_a}};
  doc_rel[doc_a1].acl = {lawyer.uid, judge.uid, citizen.uid};
  doc_rel[doc_a2].acl = {lawyer.uid, judge.uid};
  const std::map<Hash256, Rel> case_rel = {{case_a, rel_a}, {case_b, rel_b}};

  auto oracle = [&](Role role, const Uid& who, Action a, const Rel* r) {
    const bool judge_of = role == Role::Judge && r && r->judges.count(who);
    const bool counsel = role == Role::Lawyer && r && r->counsel.count(who);
    const bool party = role == Role::Citizen && r && r->parties.count(who);
    switch (a) {
      case Action::RegisterIdentity:
      case Action::FileCase:
        return role == Role::Registrar;
      case Action::ScheduleHearing:
      case Action::UpdateCaseStatus:
      case Action::RevokeAccess:
        return judge_of;
      case Action::UploadDocument:
      case Action::TransferCustody:
        return counsel;
      case Action::GrantAccess:
        return judge_of || counsel;
      case Action::SignDocument:
        return counsel || party;
      case Action::ReadDocument:
        return judge_of || counsel || (role == Role::Citizen && r && r->acl.count(who));
      case Action::ModifyDocument:
        return false;
    }
    return false;
  };

  auto payload_for = [&](Action a, const std::optional<Hash256>& res,
                         const Actor& actor) -> std::optional<TxPayload> {
    switch (a) {
      case Action::RegisterIdentity: {
        const Actor fresh = testing::make_actor("m-fresh", Role::Citizen);
        return tx::RegisterIdentity{fresh.details, fresh.key.verify_key()};
      }
      case Action::FileCase:
        return tx::FileCase{"probe", citizen.uid, judge.uid, {}};
      case Action::ScheduleHearing:
        return tx::ScheduleHearing{*res, 42};
      case Action::UpdateCaseStatus:
        return tx::UpdateCaseStatus{*res, CaseStatus::InHearing, ""};
      case Action::UploadDocument:
        return tx::UploadDocument{*res, "probe", keccak256("p"), keccak256("q"), 1};
      case Action::GrantAccess:
        return tx::GrantAccess{*res, registrar.uid};
      case Action::RevokeAccess:
        return tx::RevokeAccess{*res, registrar.uid};
      case Action::TransferCustody:
        return tx::TransferCustody{*res, registrar.uid, ""};
      case Action::SignDocument:
        return tx::SignDocument{*res, actor.key.sign(f.state.find_document(*res)->content_hash.bytes)};
      case Action::ReadDocument:
      case Action::ModifyDocument:
        return std::nullopt;
    }
    return std::nullopt;
  };

  Checker c;
  std::size_t combos = 0;
  for (Actor* actor : {&registrar, &judge, &lawyer, &citizen}) {
    const Role role = f.state.find_identity(actor->uid)->role;
    for (Action a : kAllActions) {
      std::vector<std::optional<Hash256>> resources;
      const bool registrar_action = a == Action::RegisterIdentity || a == Action::FileCase;
      const bool case_action = a == Action::ScheduleHearing || a == Action::UpdateCaseStatus ||
                               a == Action::UploadDocument;
      if (registrar_action) {
        resources = {std::nullopt};
      } else if (case_action) {
        resources = {case_a, case_b};
      } else {
        resources = {doc_a1, doc_a2};
      }
      for (const auto& res : resources) {
        ++combos;
        const Rel* r = nullptr;
        if (res && case_rel.count(*res)) r = &case_rel.at(*res);
        if (res && doc_rel.count(*res)) r = &doc_rel.at(*res);
        const bool want = oracle(role, actor->uid, a, r);
        const bool got = check_permission(f.state, actor->uid, a, res);
        const std::string label = std::string(role_name(role)) + "/" + std::string(action_name(a)) +
                                  (res ? "/" + res->hex().substr(0, 8) : "");
        c.expect(got == want, label + " check_permission=" + (got ? "true" : "false"));
        if (auto payload = payload_for(a, res, *actor)) {
          const ApplyResult applied =
              apply_transaction(f.state, f.make(*actor, std::move(*payload)), f.height + 1);
          const bool denied = applied.rejection && applied.rejection->code == ErrorCode::PermissionDenied;
          c.expect(denied == !want, label + " apply " +
                                        (applied.rejection ? std::string(error_name(applied.rejection->code))
                                                           : std::string("accepted")));
        }
      }
    }
  }
  return c.done(std::to_string(combos) + " (identity, action, resource) combinations agree");
}

Outcome replay_determinism() {
  constexpr std::size_t kAccepted = 500;
  LedgerFixture f;
  testing::TrafficGenerator gen(f, 5005);
  Checker c;
  std::size_t rejected = 0;
  while (f.accepted.size() < kAccepted) {
    const Transaction tx = gen.next(f.state);
    const Bytes before = f.state.encode();
    const ApplyResult r = apply_transaction(f.state, tx, f.height + 1);
    if (r.rejection) {
      ++rejected;
      c.expect(r.state.encode() == before,
               "rejected " + std::string(kind_name(tx.payload)) + " changed the state");
      c.expect(f.apply(tx).has_value(), "in-place apply disagreed on rejection");
      c.expect(f.state.encode() == before, "in-place rejection changed the state");
    } else {
      c.expect(!f.apply(tx).has_value(), "in-place apply disagreed on acceptance");
      c.expect(f.state == r.state, "pure and in-place apply diverged");
    }
  }
  const SigningKey key = testing::key_for("replay-authority");
  const Authority self{0, Uid{keccak256("replay-authority")}, key.verify_key()};
  const std::vector<Block> batched = testing::seal_blocks(f.accepted, self, key, 7);
  const ReplayResult first = replay_chain(batched);
  const ReplayResult second = replay_chain(batched);
  c.expect(!first.failure && !second.failure, "replay failed");
  c.expect(first.state.encode() == second.state.encode(), "two replays differ");
  const ReplayResult single = replay_chain(testing::seal_blocks(f.accepted, self, key, 1));
  c.expect(!single.failure && single.state.encode() == f.state.encode(),
           "one-per-block replay differs from the incremental fold");
  return c.done(std::to_string(kAccepted) + " accepted folded twice byte-identically, " +
                std::to_string(rejected) + " rejections pure");
}

Outcome custody_integrity() {
  constexpr int kDocs = 40;
  constexpr int kSteps = 50;
  CaseFixture fx;
  std::vector<Actor*> counsel = {fx.lawyer};
  for (int i = 0; i < 3; ++i) counsel.push_back(&fx.f.add("cust-" + std::to_string(i), Role::Lawyer));
  const Hash256 case_id = fx.f.file_case("custody", *fx.p1, *fx.p2, {counsel.begin(), counsel.end()});
  std::mt19937_64 rng(6006);
  Checker c;
  int invalid = 0, valid = 0;
  for (int d = 0; d < kDocs; ++d) {
    Actor& uploader = *counsel[rng() % counsel.size()];
    const Hash256 doc = fx.f.upload(uploader, case_id, "evidence", "item " + std::to_string(d));
    std::size_t expected_events = 0;
    for (int s = 0; s < kSteps; ++s) {
      const Uid holder = fx.f.state.find_document(doc)->current_custodian();
      const bool make_invalid = rng() % 10 < 3;
      std::vector<Actor*> pool;
      for (Actor* a : counsel) {
        if ((a->uid == holder) != make_invalid) pool.push_back(a);
      }
      Actor& sender = *pool[rng() % pool.size()];
      Actor* to = counsel[rng() % counsel.size()];
      while (to->uid == sender.uid) to = counsel[rng() % counsel.size()];
      const Bytes before = fx.f.state.encode();
      const auto rej = fx.f.submit(sender, tx::TransferCustody{doc, to->uid, "step"});
      if (make_invalid) {
        ++invalid;
        c.expect(rej && rej->code == ErrorCode::CustodyMismatch, "non-custodian transfer not CustodyMismatch");
        c.expect(fx.f.state.encode() == before, "rejected transfer changed the state");
      } else {
        ++valid;
        c.expect(!rej, "valid transfer rejected");
        if (!rej) ++expected_events;
      }
      const std::vector<CustodyEvent> history = custody_history(fx.f.state, doc);
      c.expect(history.size() == expected_events, "custody list length");
      Uid prev = uploader.uid;
      for (const CustodyEvent& e : history) {
        c.expect(e.from == prev, "custody chain broken");
        prev = e.to;
      }
    }
  }
  return c.done(std::to_string(valid) + " valid and " + std::to_string(invalid) +
                " invalid transfers; chains intact");
}

Outcome dedup() {
  std::mt19937_64 rng(7007);
  Checker c;
  MemoryChunkStore store;
  const Bytes file = testing::random_bytes(rng, 1 << 20);
  const std::size_t first = put_object(store, file, kDefaultChunkSize).new_chunks;
  const std::size_t second = put_object(store, file, kDefaultChunkSize).new_chunks;
  c.expect(first == 16, "first put added " + std::to_string(first));
  c.expect(second == 0, "second put added " + std::to_string(second));
  c.expect(store.chunk_count() == 16, "store holds " + std::to_string(store.chunk_count()));

  MemoryChunkStore shared_store;
  const Bytes prefix = testing::random_bytes(rng, 4 * kDefaultChunkSize);
  Bytes x = prefix, y = prefix;
  const Bytes tx_ = testing::random_bytes(rng, 5 * kDefaultChunkSize + 123);
  const Bytes ty = testing::random_bytes(rng, 3 * kDefaultChunkSize + 77);
  x.insert(x.end(), tx_.begin(), tx_.end());
  y.insert(y.end(), ty.begin(), ty.end());
  const PutResult px = put_object(shared_store, x, kDefaultChunkSize);
  const PutResult py = put_object(shared_store, y, kDefaultChunkSize);
  std::set<Hash256> hx, hy, common;
  for (const auto& e : px.manifest.entries) hx.insert(e.cipher_hash);
  for (const auto& e : py.manifest.entries) hy.insert(e.cipher_hash);
  std::set_intersection(hx.begin(), hx.end(), hy.begin(), hy.end(),
                        std::inserter(common, common.begin()));
  c.expect(common.size() == 4, "shared records " + std::to_string(common.size()));
  c.expect(shared_store.chunk_count() == hx.size() + hy.size() - 4, "shared store record count");
  c.expect(py.new_chunks == hy.size() - 4, "second file added " + std::to_string(py.new_chunks));
  return c.done("1 MiB file 16 then 0 new records; shared 4-chunk prefix stored once");
}

Outcome filestore_round_trip() {
  constexpr int kObjects = 200;
  testing::TempDir dir;
  DirectoryChunkStore store(dir.path() / "chunks");
  std::mt19937_64 rng(8008);
  Checker c;
  std::size_t corrupted = 0;
  for (int i = 0; i < kObjects; ++i) {
    const Bytes data = testing::random_bytes(rng, 1 + rng() % (4 * kDefaultChunkSize));
    const PutResult put = put_object(store, data, kDefaultChunkSize);
    c.expect(get_object(store, put.manifest) == data, "object " + std::to_string(i) + " round trip");

    const ManifestEntry& victim = put.manifest.entries[rng() % put.manifest.entries.size()];
    const fs::path path = store.path_for(victim.cipher_hash);
    std::string original;
    {
      std::ifstream in(path, std::ios::binary);
      original.assign(std::istreambuf_iterator<char>(in), {});
    }
    std::string damaged = original;
    damaged[rng() % damaged.size()] ^= static_cast<char>(1u << (rng() % 8));
    std::ofstream(path, std::ios::binary | std::ios::trunc) << damaged;
    ++corrupted;
    bool integrity = false;
    try {
      get_object(store, put.manifest);
    } catch (const Error& e) {
      integrity = e.code() == ErrorCode::IntegrityFailure;
    }
    c.expect(integrity, "corruption of object " + std::to_string(i) + " not IntegrityFailure");
    std::ofstream(path, std::ios::binary | std::ios::trunc) << original;
    c.expect(get_object(store, put.manifest) == data, "object " + std::to_string(i) + " after repair");
  }
  return c.done(std::to_string(kObjects) + " objects round-tripped, " + std::to_string(corrupted) +
                " corruptions raised IntegrityFailure");
}

Outcome consensus_convergence() {
  Checker c;
  auto run_pair = [&](double drop, std::uint64_t ticks, std::uint64_t last_tick, const std::string& label) {
    NetworkConfig cfg;
    cfg.node_count = 4;
    cfg.rng_seed = 42;
    cfg.drop_probability = drop;
    const auto schedule = demo_workload(4, 60, last_tick);
    const SimulationResult a = simulate(cfg, schedule, ticks);
    const SimulationResult b = simulate(cfg, schedule, ticks);
    c.expect(a.tips_agree(), label + ": tip hashes differ");
    c.expect(a.states_agree(), label + ": state hashes differ");
    c.expect(a.nodes[0].height() > 0, label + ": nothing committed");
    c.expect(a.event_log() == b.event_log(), label + ": event logs differ between runs");
    c.expect(a.nodes[0].tip().hash() == b.nodes[0].tip().hash(), label + ": tips differ between runs");
    return a.nodes[0].height();
  };
  const auto h0 = run_pair(0.0, 200, 100, "drop 0.0");
  const auto h3 = run_pair(0.3, 400, 350, "drop 0.3");
  return c.done("4 nodes agree at height " + std::to_string(h0) + " (drop 0.0) and " +
                std::to_string(h3) + " (drop 0.3, 50-tick quiet tail); reruns identical");
}

Outcome crash_recovery() {
  constexpr std::uint64_t kBlocks = 50;
  Checker c;
  testing::TempDir dir;
  const fs::path data = dir.path() / "node";
  const SigningKey key = testing::key_for("crash-authority");

  LedgerFixture f;
  testing::TrafficGenerator gen(f, 9009);
  while (f.accepted.size() < kBlocks) f.apply(gen.next(f.state));

  int pipefd[2];
  if (::pipe(pipefd) != 0) return {false, "pipe failed"};
  const pid_t child = ::fork();
  if (child < 0) return {false, "fork failed"};
  if (child == 0) {
    ::close(pipefd[0]);
    ServiceConfig cfg;
    cfg.data_dir = data;
    cfg.seal_batch = 1;
    cfg.seal_interval = std::chrono::milliseconds(1);
    cfg.snapshot_interval = 20;
    VaultService svc(cfg, testing::key_for("crash-authority"));
    for (const Transaction& tx : f.accepted) svc.submit_transaction(tx);
    const CommittedView v = svc.view();
    const std::string report = std::to_string(v.height) + " " + v.tip_hash.hex() + " " +
                               v.state->state_hash().hex() + "\n";
    (void)!::write(pipefd[1], report.data(), report.size());
    for (;;) ::pause();
  }
  ::close(pipefd[1]);
  std::string report;
  char buf[256];
  ssize_t n;
  while (report.find('\n') == std::string::npos && (n = ::read(pipefd[0], buf, sizeof buf)) > 0) {
    report.append(buf, static_cast<std::size_t>(n));
  }
  ::close(pipefd[0]);
  ::kill(child, SIGKILL);
  int status = 0;
  ::waitpid(child, &status, 0);

  std::istringstream in(report);
  std::uint64_t height = 0;
  std::string tip, state_hash;
  in >> height >> tip >> state_hash;
  c.expect(height == kBlocks, "child committed " + std::to_string(height) + " blocks");

  const AuthoritySet authorities = single_authority(key.verify_key());
  const Recovery r = recover(data, authorities);
  c.expect(r.node.height() == kBlocks, "recovered height " + std::to_string(r.node.height()));
  c.expect(r.node.tip().hash().hex() == tip, "recovered tip differs");
  c.expect(r.node.world().state_hash().hex() == state_hash, "recovered state differs");
  const Hash256 tip49 = r.node.chain()[kBlocks - 1].hash();
  const Hash256 state49 = replay_chain(std::span<const Block>(r.node.chain()).first(kBlocks)).state.state_hash();

  const DataLayout layout{data};
  const auto full = fs::file_size(layout.log());
  fs::resize_file(layout.log(), full - 7);
  const Recovery torn = recover(data, authorities);
  c.expect(torn.node.height() == kBlocks - 1, "torn log recovered to " + std::to_string(torn.node.height()));
  c.expect(torn.node.tip().hash() == tip49, "torn recovery tip differs from block 49");
  c.expect(torn.node.world().state_hash() == state49, "torn recovery state differs from replay to 49");
  c.expect(!torn.warnings.empty(), "torn tail produced no warning");
  return c.done("SIGKILL after block 50 recovered tip and state; torn final record recovered to 49");
}

Outcome docket_ordering() {
  constexpr int kTrials = 60;
  std::mt19937_64 rng(1111);
  Checker c;
  for (int t = 0; t < kTrials; ++t) {
    LedgerFixture f;
    std::vector<Actor*> judges = {&f.add("dj-0", Role::Judge), &f.add("dj-1", Role::Judge)};
    Actor& lawyer = f.add("dl", Role::Lawyer);
    Actor& p1 = f.add("dp1", Role::Citizen);
    Actor& p2 = f.add("dp2", Role::Citizen);
    const int cases = 10 + static_cast<int>(rng() % 20);
    for (int i = 0; i < cases; ++i) {
      const Hash256 id = f.file_case("docket", p1, p2, {&lawyer});
      const Case& cs = *f.state.find_case(id);
      Actor& judge = *(judges[0]->uid == cs.judge ? judges[0] : judges[1]);
      if (rng() % 4 != 0) {
        f.must(judge, tx::ScheduleHearing{id, static_cast<std::int64_t>(rng() % 8) * 1000});
      }
      if (rng() % 6 == 0) {
        for (CaseStatus s : {CaseStatus::InHearing, CaseStatus::Decided, CaseStatus::Closed}) {
          f.must(judge, tx::UpdateCaseStatus{id, s, ""});
        }
      }
    }
    for (Actor* j : judges) {
      std::vector<const Case*> expected;
      for (const auto& [id, cs] : f.state.cases) {
        if (cs.judge == j->uid && cs.status != CaseStatus::Closed) expected.push_back(&cs);
      }
      std::sort(expected.begin(), expected.end(), [](const Case* a, const Case* b) {
        const auto ka = std::make_tuple(!a->next_hearing_at.has_value(), a->next_hearing_at.value_or(0), a->case_number);
        const auto kb = std::make_tuple(!b->next_hearing_at.has_value(), b->next_hearing_at.value_or(0), b->case_number);
        return ka < kb;
      });
      const std::vector<Case> got = pending_cases_for_judge(f.state, j->uid);
      bool same = got.size() == expected.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) same = got[i].case_id == expected[i]->case_id;
      c.expect(same, "trial " + std::to_string(t) + " docket order differs");
    }
  }
  return c.done(std::to_string(kTrials) + " random dockets sorted by hearing, case number, unscheduled last");
}

}  // namespace
}  // namespace evault

int main() {
  using namespace evault;
  const std::vector<Criterion> criteria = {
      {"hash-vectors", 1, hash_vectors},
      {"tamper-detection", 10, tamper_detection},
      {"chain-tamper-localization", 10, chain_localization},
      {"permission-matrix", 5, permission_matrix},
      {"replay-determinism", 10, replay_determinism},
      {"custody-integrity", 10, custody_integrity},
      {"dedup", 10, dedup},
      {"filestore-round-trip", 30, filestore_round_trip},
      {"consensus-convergence", 30, consensus_convergence},
      {"crash-recovery", 30, crash_recovery},
      {"docket-ordering", 5, docket_ordering},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) {
      o.ok = false;
      o.detail += "; exceeded time limit";
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s %-26s %7.3f s (limit %4.0f s)  %s\n", o.ok ? "PASS" : "FAIL", cr.name.c_str(),
                secs, cr.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed;
}
