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

#include <array>
#include <sstream>

#include "evault/consensus.hpp"
#include "evault/error.hpp"

namespace evault {
namespace {

std::uint64_t parse_u64(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadScenario, "bad integer for " + key + ": " + value);
  }
}

double parse_fraction(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadScenario, "bad number for " + key + ": " + value);
  }
}

class WorkloadBuilder {
 public:
  WorkloadBuilder(std::uint32_t node_count, std::size_t tx_count,
                  std::uint64_t last_tick, std::uint64_t seed)
      : node_count_(node_count), tx_count_(tx_count), last_tick_(last_tick), seed_(seed) {}

  struct Actor {
    IdentityDetails details;
    Uid uid;
    SigningKey key;
  };

  Actor make_actor(const std::string& name, Role role) {
    IdentityDetails d{name, "demo-" + std::to_string(seed_) + "-" + name, role,
                      name + "@example.org"};
    Hash256 seed = keccak256("evault/demo/" + std::to_string(seed_) + "/" + name);
    return {d, derive_uid(d), SigningKey::from_seed(seed.bytes)};
  }

  bool full() const { return out_.size() >= tx_count_; }

  // Appends one transaction and applies it to the local mirror so later
  // steps can refer to ids and judge assignments it produced.
  Hash256 emit(const Actor& sender, TxPayload payload) {
    const std::size_t index = out_.size();
    const std::uint64_t tick =
        tx_count_ <= 1 ? 1 : 1 + (index * (last_tick_ - 1)) / (tx_count_ - 1);
    Transaction t = make_transaction(std::move(payload), sender.uid,
                                     state_.last_nonce(sender.uid) + 1,
                                     static_cast<std::int64_t>(tick) * kTickMillis,
                                     sender.key);
    if (auto r = apply_transaction_in_place(state_, t, index + 1)) {
      throw std::logic_error("demo workload produced an invalid transaction: " +
                             r->message);
    }
    Hash256 h = t.hash();
    out_.push_back({tick, static_cast<std::uint32_t>(index % node_count_), std::move(t)});
    return h;
  }

  std::vector<ScheduledTx> build() {
    if (tx_count_ == 0) return {};
    Actor registrar = make_actor("registrar", Role::Registrar);
    std::vector<Actor> judges, lawyers, citizens;
    for (int i = 0; i < 2; ++i) judges.push_back(make_actor("judge" + std::to_string(i), Role::Judge));
    for (int i = 0; i < 3; ++i) lawyers.push_back(make_actor("lawyer" + std::to_string(i), Role::Lawyer));
    for (int i = 0; i < 4; ++i) citizens.push_back(make_actor("citizen" + std::to_string(i), Role::Citizen));

    emit(registrar, tx::RegisterIdentity{registrar.details, registrar.key.verify_key()});
    for (auto* group : {&judges, &lawyers, &citizens}) {
      for (const Actor& a : *group) {
        if (full()) return out_;
        emit(registrar, tx::RegisterIdentity{a.details, a.key.verify_key()});
      }
    }

    static constexpr std::array<const char*, 5> kTypes = {
        "property dispute", "contract breach", "custody of minor", "tenancy",
        "criminal complaint"};
    for (std::size_t k = 0; !full(); ++k) {
      const Actor& lead = lawyers[k % 3];
      const Actor& second = lawyers[(k + 1) % 3];
      const Actor& petitioner = citizens[k % 4];
      const Actor& defendant = citizens[(k + 1) % 4];
      Hash256 case_id = emit(registrar, tx::FileCase{kTypes[k % kTypes.size()],
                                                     petitioner.uid, defendant.uid,
                                                     {lead.uid, second.uid}});
      const Uid judge_uid = state_.cases.at(case_id).judge;
      const Actor& judge = judges[0].uid == judge_uid ? judges[0] : judges[1];
      if (full()) break;
      std::int64_t hearing =
          1'700'000'000'000 + static_cast<std::int64_t>((k * 7919 + seed_) % 30) * 86'400'000;
      emit(judge, tx::ScheduleHearing{case_id, hearing});
      if (full()) break;
      const std::string body = "evidence bundle " + std::to_string(k);
      Hash256 content = keccak256(body);
      Hash256 doc_id = emit(lead, tx::UploadDocument{case_id, "Exhibit " + std::to_string(k),
                                                     content, keccak256("manifest:" + body),
                                                     body.size()});
      if (full()) break;
      emit(lead, tx::TransferCustody{doc_id, second.uid, "for review"});
      if (full()) break;
      emit(petitioner, tx::SignDocument{doc_id, petitioner.key.sign(content.bytes)});
      if (full()) break;
      emit(judge, tx::GrantAccess{doc_id, citizens[(k + 2) % 4].uid});
      if (full()) break;
      emit(judge, tx::UpdateCaseStatus{case_id, CaseStatus::InHearing, "first hearing"});
      if (full()) break;
      emit(second, tx::TransferCustody{doc_id, lead.uid, "returned"});
    }
    return out_;
  }

 private:
  std::uint32_t node_count_;
  std::size_t tx_count_;
  std::uint64_t last_tick_;
  std::uint64_t seed_;
  WorldState state_;
  std::vector<ScheduledTx> out_;
};

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    auto value = [&]() {
      std::string v;
      if (!(fields >> v)) {
        throw Error(ErrorCode::BadScenario,
                    "line " + std::to_string(line_no) + ": missing value for " + key);
      }
      return v;
    };
    if (key == "node_count") {
      sc.config.node_count = static_cast<std::uint32_t>(parse_u64(value(), key));
    } else if (key == "seed") {
      sc.config.rng_seed = parse_u64(value(), key);
    } else if (key == "drop") {
      sc.config.drop_probability = parse_fraction(value(), key);
    } else if (key == "delay") {
      sc.config.mean_delay_ticks = parse_u64(value(), key);
    } else if (key == "work_bits") {
      sc.config.work_bits = static_cast<unsigned>(parse_u64(value(), key));
    } else if (key == "ticks") {
      sc.ticks = parse_u64(value(), key);
    } else if (key == "retransmit") {
      sc.config.retransmit_every = parse_u64(value(), key);
    } else if (key == "max_block_txs") {
      sc.config.max_block_txs = parse_u64(value(), key);
    } else if (key == "tx") {
      ScheduledTx s;
      s.tick = parse_u64(value(), "tx tick");
      s.node = static_cast<std::uint32_t>(parse_u64(value(), "tx node"));
      try {
        s.tx = Transaction::decode(from_hex(value()));
      } catch (const Error& e) {
        throw Error(ErrorCode::BadScenario,
                    "line " + std::to_string(line_no) + ": " + e.what());
      }
      sc.schedule.push_back(std::move(s));
    } else {
      throw Error(ErrorCode::BadScenario,
                  "line " + std::to_string(line_no) + ": unknown key " + key);
    }
    std::string extra;
    if (fields >> extra) {
      throw Error(ErrorCode::BadScenario,
                  "line " + std::to_string(line_no) + ": trailing field " + extra);
    }
  }
  if (!(sc.config.drop_probability >= 0.0 && sc.config.drop_probability < 1.0)) {
    throw Error(ErrorCode::BadScenario, "drop must be in [0, 1)");
  }
  return sc;
}

std::string format_scenario(const Scenario& sc) {
  std::ostringstream out;
  out.precision(17);
  out << "node_count " << sc.config.node_count << "\n"
      << "seed " << sc.config.rng_seed << "\n"
      << "drop " << sc.config.drop_probability << "\n"
      << "delay " << sc.config.mean_delay_ticks << "\n"
      << "work_bits " << sc.config.work_bits << "\n"
      << "retransmit " << sc.config.retransmit_every << "\n"
      << "max_block_txs " << sc.config.max_block_txs << "\n"
      << "ticks " << sc.ticks << "\n";
  for (const ScheduledTx& s : sc.schedule) {
    out << "tx " << s.tick << " " << s.node << " " << to_hex(s.tx.encode()) << "\n";
  }
  return out.str();
}

std::vector<ScheduledTx> demo_workload(std::uint32_t node_count, std::size_t tx_count,
                                       std::uint64_t last_tick, std::uint64_t seed) {
  if (node_count == 0) {
    throw Error(ErrorCode::EmptyAuthoritySet, "workload needs at least one node");
  }
  if (last_tick == 0) throw Error(ErrorCode::ZeroTicks, "workload needs last_tick >= 1");
  return WorkloadBuilder(node_count, tx_count, last_tick, seed).build();
}

}  // namespace evault
