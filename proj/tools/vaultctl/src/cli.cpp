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

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "evault/consensus.hpp"
#include "evault/chain.hpp"
#include "evault/vaultctl.hpp"
#include "evault/wire.hpp"

namespace evault::cli {
namespace {

namespace fs = std::filesystem;
using wire::json;
using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A non-2xx reply; the body is the server's envelope and is shown verbatim.
struct RemoteError {
  int status;
  std::string body;
};

struct Report {
  ojson data;
  std::string text;  // empty: render data generically
  int exit_code = kExitOk;
};

std::string scalar_text(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void render(const ojson& data, std::ostream& out) {
  for (const auto& [key, value] : data.items()) {
    if (value.is_array()) {
      out << key << ": " << value.size() << "\n";
      for (const ojson& item : value) {
        out << "  -";
        if (item.is_object()) {
          for (const auto& [k, v] : item.items()) out << " " << k << "=" << scalar_text(v);
        } else {
          out << " " << scalar_text(item);
        }
        out << "\n";
      }
    } else {
      out << key << ": " << scalar_text(value) << "\n";
    }
  }
}

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::int64_t parse_time(const std::string& text) {
  std::int64_t ms = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), ms);
  if (ec == std::errc() && ptr == text.data() + text.size()) return ms;
  std::tm tm{};
  int sec = 0;
  char z = 0;
  int n = std::sscanf(text.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &tm.tm_year, &tm.tm_mon,
                      &tm.tm_mday, &tm.tm_hour, &tm.tm_min, &sec, &z);
  if (n != 7 || z != 'Z') {
    throw UsageError("--at: expected milliseconds since epoch or YYYY-MM-DDTHH:MM:SSZ, got '" +
                     text + "'");
  }
  tm.tm_year -= 1900;
  tm.tm_mon -= 1;
  tm.tm_sec = sec;
  return static_cast<std::int64_t>(timegm(&tm)) * 1000;
}

Hash256 parse_hash(const std::string& text, const std::string& flag) {
  try {
    return Hash256::from_hex(text);
  } catch (const Error&) {
    throw UsageError(flag + ": expected 64 hex characters, got '" + text + "'");
  }
}

Uid parse_uid(const std::string& text, const std::string& flag) {
  return {parse_hash(text, flag)};
}

struct Profile {
  std::string server;
  std::string key_file;
  std::string uid;
};

/// Shared state for the one subcommand being run.
class Context {
 public:
  Context(Profile profile, const Environment& env) : profile_(std::move(profile)), env_(env) {}

  Transport& remote() {
    if (!transport_) {
      if (profile_.server.empty()) throw UsageError("--server is required (or set it in the profile)");
      transport_ = env_.connect(profile_.server);
    }
    return *transport_;
  }

  const SigningKey& key() {
    if (!key_) {
      if (profile_.key_file.empty()) throw UsageError("--key is required (or set it in the profile)");
      key_ = read_seed_file(profile_.key_file);
    }
    return *key_;
  }

  Uid uid() const {
    if (profile_.uid.empty()) throw UsageError("--uid is required (or set it in the profile)");
    return parse_uid(profile_.uid, "--uid");
  }

  std::int64_t now() const { return env_.now_ms(); }

  json get(const std::string& path, const std::map<std::string, std::string>& query = {},
           bool authenticated = false) {
    std::optional<std::string> token;
    if (authenticated) token = session();
    return check(remote().get(path, query, token));
  }

  json post(const std::string& path, const std::string& body, bool authenticated = false,
            const std::string& content_type = "application/json") {
    std::optional<std::string> token;
    if (authenticated) token = session();
    return check(remote().post(path, body, content_type, token));
  }

  /// Lazily runs the challenge/response login.
  std::string session() {
    if (!token_) {
      const Uid me = uid();
      json c = check(remote().post("/auth/challenge", json{{"uid", me.hex()}}.dump(),
                                   "application/json", std::nullopt));
      const Bytes challenge = from_hex(c.at("challenge").get<std::string>());
      const Signature sig = sign(key(), challenge);
      json s = check(remote().post("/auth/session",
                                   json{{"uid", me.hex()}, {"signature", sig.hex()}}.dump(),
                                   "application/json", std::nullopt));
      token_ = s.at("token").get<std::string>();
    }
    return *token_;
  }

  std::uint64_t next_nonce(const Uid& sender) {
    HttpReply r = remote().get("/identities/" + sender.hex(), {}, std::nullopt);
    if (r.status == 404) return 1;
    return check(r).at("last_nonce").get<std::uint64_t>() + 1;
  }

  ojson submit(TxPayload payload, std::optional<Uid> sender = std::nullopt) {
    const Uid from = sender ? *sender : uid();
    const Transaction tx =
        make_transaction(std::move(payload), from, next_nonce(from), now(), key());
    json r = post("/tx", wire::to_json(tx).dump());
    return ojson{{"block_height", r.at("block_height")}, {"tx_hash", r.at("tx_hash")}};
  }

 private:
  static json check(const HttpReply& r) {
    if (r.status < 200 || r.status >= 300) throw RemoteError{r.status, r.body};
    json j = json::parse(r.body, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::DecodeError, "server reply is not JSON");
    return j;
  }

  Profile profile_;
  const Environment& env_;
  std::unique_ptr<Transport> transport_;
  std::optional<SigningKey> key_;
  std::optional<std::string> token_;
};

Profile load_profile(const std::string& config_path, const std::string& name) {
  Profile p;
  if (config_path.empty()) return p;
  std::ifstream in(config_path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read config " + config_path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::DecodeError, "config " + config_path + " is not a JSON object");
  }
  const json* entry = &j;
  if (j.contains("profiles")) {
    const json& all = j["profiles"];
    if (!all.is_object() || !all.contains(name)) {
      throw UsageError("--profile: no profile named '" + name + "' in " + config_path);
    }
    entry = &all[name];
  }
  auto str = [&](const char* k) {
    return entry->contains(k) && (*entry)[k].is_string() ? (*entry)[k].get<std::string>()
                                                         : std::string();
  };
  p.server = str("server");
  p.key_file = str("key");
  p.uid = str("uid");
  if (!p.key_file.empty() && fs::path(p.key_file).is_relative()) {
    p.key_file = (fs::path(config_path).parent_path() / p.key_file).string();
  }
  return p;
}

ojson case_summary(const json& c) {
  return ojson{{"case_number", c.at("case_number")},
               {"case_id", c.at("case_id")},
               {"case_type", c.at("case_type")},
               {"status", c.at("status")},
               {"next_hearing_at", c.at("next_hearing_at")}};
}

ojson case_rows(const json& cases) {
  ojson rows = ojson::array();
  for (const json& c : cases) rows.push_back(case_summary(c));
  return rows;
}

// Option holders for every subcommand.
struct Options {
  std::string out_path;
  bool force = false;

  std::string full_name, national_id, role, contact, public_key;
  bool bootstrap = false;

  std::string case_type, petitioner, defendant;
  std::vector<std::string> lawyers;

  std::string case_id, at, status, note;
  std::string doc_id, to, file, title, content_hash;
  std::string view, query;

  std::uint32_t nodes = 4;
  std::uint64_t seed = 42;
  std::uint64_t ticks = 200;
  double drop = 0.0;
  std::uint64_t delay = 2;
  std::size_t txs = 60;
  unsigned work_bits = 0;
  std::string scenario, write_scenario;
  bool events = false;
};

Report cmd_keygen(const Options& o, Context&) {
  if (fs::exists(o.out_path) && !o.force) {
    throw Error(ErrorCode::IoError, o.out_path + " already exists; pass --force to replace it");
  }
  const auto seed = random_seed();
  write_seed_file(o.out_path, seed);
  const SigningKey key = SigningKey::from_seed(seed);
  return {ojson{{"key_file", o.out_path}, {"public_key", key.verify_key().hex()}}, {}};
}

Report cmd_register(const Options& o, Context& ctx) {
  auto role = parse_role(o.role);
  if (!role) throw UsageError("--role: expected judge, lawyer, citizen or registrar, got '" + o.role + "'");
  IdentityDetails details{o.full_name, o.national_id, *role, o.contact};
  const Uid subject = derive_uid(details);
  VerifyKey vk;
  std::optional<Uid> sender;
  if (o.bootstrap) {
    vk = ctx.key().verify_key();
    sender = subject;
  } else {
    if (o.public_key.empty()) throw UsageError("--public-key is required unless --bootstrap is given");
    try {
      vk = VerifyKey::from_hex(o.public_key);
    } catch (const Error&) {
      throw UsageError("--public-key: expected 64 hex characters");
    }
  }
  ojson r = ctx.submit(tx::RegisterIdentity{details, vk}, sender);
  ojson data{{"uid", subject.hex()}, {"role", role_name(*role)}, {"public_key", vk.hex()}};
  data.update(r);
  return {data, {}};
}

Report cmd_file_case(const Options& o, Context& ctx) {
  tx::FileCase p{o.case_type, parse_uid(o.petitioner, "--petitioner"),
                 parse_uid(o.defendant, "--defendant"), {}};
  for (const std::string& l : o.lawyers) p.lawyers.push_back(parse_uid(l, "--lawyer"));
  ojson r = ctx.submit(std::move(p));
  return {ojson{{"case_id", r["tx_hash"]}, {"block_height", r["block_height"]},
                {"tx_hash", r["tx_hash"]}},
          {}};
}

Report cmd_schedule(const Options& o, Context& ctx) {
  const Hash256 id = parse_hash(o.case_id, "--case");
  const std::int64_t at = parse_time(o.at);
  ojson data{{"case_id", id.hex()}, {"hearing_at", at}};
  data.update(ctx.submit(tx::ScheduleHearing{id, at}));
  return {data, {}};
}

Report cmd_set_status(const Options& o, Context& ctx) {
  const Hash256 id = parse_hash(o.case_id, "--case");
  auto status = parse_status(o.status);
  if (!status) throw UsageError("--status: expected Filed, InHearing, Decided or Closed");
  ojson data{{"case_id", id.hex()}, {"status", status_name(*status)}};
  data.update(ctx.submit(tx::UpdateCaseStatus{id, *status, o.note}));
  return {data, {}};
}

Report cmd_upload(const Options& o, Context& ctx) {
  const Hash256 case_id = parse_hash(o.case_id, "--case");
  const Bytes data = read_file(o.file);
  const PreparedObject obj = prepare_object(data);
  std::size_t fresh = 0;
  for (const Bytes& c : obj.ciphertexts) {
    json r = ctx.post("/files", std::string(c.begin(), c.end()), true, "application/octet-stream");
    if (r.at("stored").get<bool>()) ++fresh;
  }
  ctx.post("/manifests", wire::to_json(obj.manifest).dump(), true);
  const std::string title = o.title.empty() ? fs::path(o.file).filename().string() : o.title;
  ojson r = ctx.submit(tx::UploadDocument{case_id, title, obj.manifest.content_hash,
                                          obj.manifest.manifest_hash(), data.size()});
  ojson out{{"doc_id", r["tx_hash"]},
            {"title", title},
            {"content_hash", obj.manifest.content_hash.hex()},
            {"manifest_hash", obj.manifest.manifest_hash().hex()},
            {"size_bytes", data.size()},
            {"chunks", obj.ciphertexts.size()},
            {"new_chunks", fresh}};
  out.update(r);
  return {out, {}};
}

Report cmd_access(const Options& o, Context& ctx, bool grant) {
  const Hash256 doc = parse_hash(o.doc_id, "--doc");
  const Uid who = parse_uid(o.to, "--to");
  ojson data{{"doc_id", doc.hex()}, {"grantee", who.hex()}};
  if (grant) {
    data.update(ctx.submit(tx::GrantAccess{doc, who}));
  } else {
    data.update(ctx.submit(tx::RevokeAccess{doc, who}));
  }
  return {data, {}};
}

Report cmd_transfer(const Options& o, Context& ctx) {
  const Hash256 doc = parse_hash(o.doc_id, "--doc");
  const Uid to = parse_uid(o.to, "--to");
  ojson data{{"doc_id", doc.hex()}, {"to", to.hex()}};
  data.update(ctx.submit(tx::TransferCustody{doc, to, o.note}));
  return {data, {}};
}

Report cmd_sign_doc(const Options& o, Context& ctx) {
  const Hash256 doc = parse_hash(o.doc_id, "--doc");
  Hash256 content;
  if (!o.file.empty()) {
    content = keccak256(read_file(o.file));
  } else if (!o.content_hash.empty()) {
    content = parse_hash(o.content_hash, "--content-hash");
  } else {
    content = wire::hash_field(ctx.get("/docs/" + doc.hex(), {}, true), "content_hash");
  }
  const Signature sig = sign(ctx.key(), content.bytes);
  ojson data{{"doc_id", doc.hex()}, {"content_hash", content.hex()}, {"signature", sig.hex()}};
  data.update(ctx.submit(tx::SignDocument{doc, sig}));
  return {data, {}};
}

Report cmd_verify(const Options& o, Context& ctx) {
  const Hash256 doc = parse_hash(o.doc_id, "--doc");
  const Hash256 content = keccak256(read_file(o.file));
  json r = ctx.get("/docs/" + doc.hex() + "/verify", {{"hash", content.hex()}});
  const std::string verdict = r.at("verdict").get<std::string>();
  return {ojson{{"doc_id", doc.hex()}, {"content_hash", content.hex()}, {"verdict", verdict}},
          verdict + "\n", verdict == "Match" ? kExitOk : kExitDomainError};
}

Report cmd_history(const Options& o, Context& ctx) {
  const Hash256 doc = parse_hash(o.doc_id, "--doc");
  json d = ctx.get("/docs/" + doc.hex(), {}, true);
  ojson events = ojson::array();
  std::string text = "doc " + doc.hex() + " uploaded by " + d.at("uploader").get<std::string>() +
                     " at height " + std::to_string(d.at("uploaded_at_height").get<std::uint64_t>()) +
                     "\n";
  for (const json& e : d.at("custody")) {
    events.push_back(ojson{{"at_height", e.at("at_height")},
                           {"from", e.at("from")},
                           {"to", e.at("to")},
                           {"note", e.at("note")}});
    text += "height " + std::to_string(e.at("at_height").get<std::uint64_t>()) + " " +
            e.at("from").get<std::string>() + " -> " + e.at("to").get<std::string>();
    if (!e.at("note").get<std::string>().empty()) text += " (" + e.at("note").get<std::string>() + ")";
    text += "\n";
  }
  text += "custodian " + d.at("custodian").get<std::string>() + "\n";
  return {ojson{{"doc_id", doc.hex()},
                {"uploader", d.at("uploader")},
                {"uploaded_at_height", d.at("uploaded_at_height")},
                {"custodian", d.at("custodian")},
                {"custody", std::move(events)}},
          text};
}

std::string case_table(const ojson& rows) {
  std::string text;
  for (const ojson& r : rows) {
    text += "#" + std::to_string(r["case_number"].get<std::uint64_t>()) + " " +
            r["case_id"].get<std::string>() + " " + r["case_type"].get<std::string>() + " " +
            r["status"].get<std::string>() + " hearing " + scalar_text(r["next_hearing_at"]) +
            "\n";
  }
  if (rows.empty()) text = "no cases\n";
  return text;
}

Report cmd_docket(const Options& o, Context& ctx) {
  std::string view = o.view;
  if (view.empty()) {
    json me = ctx.get("/identities/" + ctx.uid().hex());
    view = me.at("role").get<std::string>();
    for (char& c : view) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (view == "registrar") throw UsageError("--view is required for registrar identities");
  }
  ojson rows = case_rows(ctx.get("/cases", {{"role_view", view}}, true));
  std::string text = case_table(rows);
  return {ojson{{"view", view}, {"cases", rows}}, text};
}

Report cmd_search(const Options& o, Context& ctx) {
  ojson rows = case_rows(ctx.get("/cases/search", {{"q", o.query}}, true));
  std::string text = case_table(rows);
  return {ojson{{"query", o.query}, {"cases", rows}}, text};
}

Report cmd_chain_verify(const Options&, Context& ctx) {
  json head = ctx.get("/chain/head");
  std::vector<Authority> members;
  for (const json& a : head.at("authorities")) {
    members.push_back({a.at("node_id").get<std::uint32_t>(), wire::uid_field(a, "proposer"),
                       VerifyKey::from_hex(a.at("public_key").get<std::string>())});
  }
  const AuthoritySet authorities(std::move(members));
  const std::uint64_t height = head.at("height").get<std::uint64_t>();
  std::vector<Block> blocks;
  for (std::uint64_t h = 0; h <= height; ++h) {
    blocks.push_back(wire::block_from_json(ctx.get("/chain/blocks/" + std::to_string(h))));
  }
  const ChainVerdict v = verify_chain(blocks, authorities, 0);
  const std::string tip = blocks.back().hash().hex();
  std::optional<std::uint64_t> bad_height = v.first_invalid_height;
  std::string reason = v.ok() ? "" : std::string(check_name(v.reason));
  if (v.ok() && tip != head.at("hash").get<std::string>()) {
    bad_height = height;
    reason = "tip hash differs from the advertised head";
  }
  ojson data{{"height", height}, {"tip", tip}, {"valid", !bad_height}};
  std::string text;
  if (!bad_height) {
    text = "chain valid: " + std::to_string(height) + " blocks, tip " + tip + "\n";
  } else {
    data["first_invalid_height"] = *bad_height;
    data["reason"] = reason;
    text = "chain INVALID at height " + std::to_string(*bad_height) + ": " + reason + "\n";
  }
  return {data, text, bad_height ? kExitDomainError : kExitOk};
}

Report cmd_simulate(const Options& o, const CLI::App& sub) {
  Scenario sc;
  if (!o.scenario.empty()) {
    const Bytes text = read_file(o.scenario);
    sc = parse_scenario(std::string_view(reinterpret_cast<const char*>(text.data()), text.size()));
  }
  if (o.scenario.empty() || sub.count("--nodes")) sc.config.node_count = o.nodes;
  if (o.scenario.empty() || sub.count("--seed")) sc.config.rng_seed = o.seed;
  if (o.scenario.empty() || sub.count("--ticks")) sc.ticks = o.ticks;
  if (o.scenario.empty() || sub.count("--drop")) sc.config.drop_probability = o.drop;
  if (o.scenario.empty() || sub.count("--delay")) sc.config.mean_delay_ticks = o.delay;
  if (o.scenario.empty() || sub.count("--work-bits")) sc.config.work_bits = o.work_bits;
  if (sc.config.drop_probability < 0.0 || sc.config.drop_probability >= 1.0) {
    throw UsageError("--drop: must lie in [0, 1)");
  }
  if (o.scenario.empty()) {
    const std::uint64_t last = std::max<std::uint64_t>(1, sc.ticks / 2);
    sc.schedule = demo_workload(sc.config.node_count, o.txs, last);
  }
  if (!o.write_scenario.empty()) {
    std::ofstream f(o.write_scenario);
    f << format_scenario(sc);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + o.write_scenario);
  }
  const SimulationResult res = simulate(sc.config, sc.schedule, sc.ticks);
  ojson nodes = ojson::array();
  std::string text;
  for (const NodeState& n : res.nodes) {
    nodes.push_back(ojson{{"node", n.id()},
                          {"height", n.height()},
                          {"tip", n.tip().hash().hex()},
                          {"state_hash", n.world().state_hash().hex()}});
    text += "node " + std::to_string(n.id()) + " height " + std::to_string(n.height()) +
            " tip " + n.tip().hash().hex() + "\n";
  }
  const bool converged = res.tips_agree() && res.states_agree();
  text += converged ? "converged\n" : "DIVERGED\n";
  ojson data{{"nodes", std::move(nodes)},
             {"transactions", sc.schedule.size()},
             {"events", res.events.size()},
             {"converged", converged}};
  if (o.events) {
    ojson lines = ojson::array();
    for (const SimEvent& e : res.events) lines.push_back(e.to_line());
    data["event_log"] = std::move(lines);
    text += res.event_log();
  }
  return {data, text, converged ? kExitOk : kExitDomainError};
}

}  // namespace

Environment default_environment() {
  Environment env;
  env.connect = connect_http;
  env.getenv = [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
  env.now_ms = [] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  };
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"eVault command-line client", "vaultctl"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_out = false;
  std::string config_path, profile_name = "default", server, key_file, uid;
  app.add_flag("--json", json_out, "Print machine-readable JSON");
  app.add_option("--config", config_path, "Profile config file (default: $EVAULT_CONFIG)");
  app.add_option("--profile", profile_name, "Profile name within the config file");
  app.add_option("--server", server, "vaultd base URL");
  app.add_option("--key", key_file, "Signing key file (mode 0600)");
  app.add_option("--uid", uid, "Identity UID (hex)");

  Options o;
  auto* keygen = app.add_subcommand("keygen", "Generate a signing key file");
  keygen->add_option("--out", o.out_path, "Key file to write")->required();
  keygen->add_flag("--force", o.force, "Replace an existing file");

  auto* reg = app.add_subcommand("register", "Register an identity (registrar)");
  reg->add_option("--name", o.full_name)->required();
  reg->add_option("--national-id", o.national_id)->required();
  reg->add_option("--role", o.role)->required();
  reg->add_option("--contact", o.contact)->required();
  reg->add_option("--public-key", o.public_key, "Subject's verify key (hex)");
  reg->add_flag("--bootstrap", o.bootstrap, "Self-register the first registrar");

  auto* file_case = app.add_subcommand("file-case", "File a new case (registrar)");
  file_case->add_option("--type", o.case_type)->required();
  file_case->add_option("--petitioner", o.petitioner)->required();
  file_case->add_option("--defendant", o.defendant)->required();
  file_case->add_option("--lawyer", o.lawyers, "Counsel UID; repeatable");

  auto* schedule = app.add_subcommand("schedule", "Schedule a hearing (judge)");
  schedule->add_option("--case", o.case_id)->required();
  schedule->add_option("--at", o.at, "ms since epoch or YYYY-MM-DDTHH:MM:SSZ")->required();

  auto* set_status = app.add_subcommand("set-status", "Advance a case status (judge)");
  set_status->add_option("--case", o.case_id)->required();
  set_status->add_option("--status", o.status)->required();
  set_status->add_option("--note", o.note);

  auto* upload = app.add_subcommand("upload", "Store a file and record it on a case (lawyer)");
  upload->add_option("--case", o.case_id)->required();
  upload->add_option("--file", o.file)->required()->check(CLI::ExistingFile);
  upload->add_option("--title", o.title);

  auto* grant = app.add_subcommand("grant", "Grant read access to a document");
  grant->add_option("--doc", o.doc_id)->required();
  grant->add_option("--to", o.to)->required();

  auto* revoke = app.add_subcommand("revoke", "Revoke read access to a document");
  revoke->add_option("--doc", o.doc_id)->required();
  revoke->add_option("--to", o.to)->required();

  auto* transfer = app.add_subcommand("transfer-custody", "Hand a document to another identity");
  transfer->add_option("--doc", o.doc_id)->required();
  transfer->add_option("--to", o.to)->required();
  transfer->add_option("--note", o.note);

  auto* sign_doc = app.add_subcommand("sign-doc", "Sign a document's content hash");
  sign_doc->add_option("--doc", o.doc_id)->required();
  auto* sign_file = sign_doc->add_option("--file", o.file, "Local copy to hash")->check(CLI::ExistingFile);
  sign_doc->add_option("--content-hash", o.content_hash)->excludes(sign_file);

  auto* verify_cmd = app.add_subcommand("verify", "Compare a local file with the ledger");
  verify_cmd->add_option("--doc", o.doc_id)->required();
  verify_cmd->add_option("--file", o.file)->required()->check(CLI::ExistingFile);

  auto* history = app.add_subcommand("history", "Show a document's custody history");
  history->add_option("--doc", o.doc_id)->required();

  auto* docket = app.add_subcommand("docket", "List this identity's cases");
  docket->add_option("--view", o.view)->check(CLI::IsMember({"judge", "lawyer", "citizen"}));

  auto* search = app.add_subcommand("search", "Search cases");
  search->add_option("query", o.query)->required();

  auto* chain_verify = app.add_subcommand("chain-verify", "Download and verify the chain");

  auto* sim = app.add_subcommand("simulate", "Run the consensus simulator");
  sim->add_option("--nodes", o.nodes)->check(CLI::Range(1u, 64u));
  sim->add_option("--seed", o.seed);
  sim->add_option("--ticks", o.ticks)->check(CLI::PositiveNumber);
  sim->add_option("--drop", o.drop);
  sim->add_option("--delay", o.delay)->check(CLI::PositiveNumber);
  sim->add_option("--txs", o.txs);
  sim->add_option("--work-bits", o.work_bits)->check(CLI::Range(0u, 24u));
  sim->add_option("--scenario", o.scenario)->check(CLI::ExistingFile);
  sim->add_option("--write-scenario", o.write_scenario);
  sim->add_flag("--events", o.events, "Include the event log");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (config_path.empty() && env.getenv) {
      if (auto v = env.getenv("EVAULT_CONFIG")) config_path = *v;
    }
    Profile profile = load_profile(config_path, profile_name);
    if (!server.empty()) profile.server = server;
    if (!key_file.empty()) profile.key_file = key_file;
    if (!uid.empty()) profile.uid = uid;
    Context ctx(std::move(profile), env);

    Report report;
    if (*keygen) report = cmd_keygen(o, ctx);
    else if (*reg) report = cmd_register(o, ctx);
    else if (*file_case) report = cmd_file_case(o, ctx);
    else if (*schedule) report = cmd_schedule(o, ctx);
    else if (*set_status) report = cmd_set_status(o, ctx);
    else if (*upload) report = cmd_upload(o, ctx);
    else if (*grant) report = cmd_access(o, ctx, true);
    else if (*revoke) report = cmd_access(o, ctx, false);
    else if (*transfer) report = cmd_transfer(o, ctx);
    else if (*sign_doc) report = cmd_sign_doc(o, ctx);
    else if (*verify_cmd) report = cmd_verify(o, ctx);
    else if (*history) report = cmd_history(o, ctx);
    else if (*docket) report = cmd_docket(o, ctx);
    else if (*search) report = cmd_search(o, ctx);
    else if (*chain_verify) report = cmd_chain_verify(o, ctx);
    else report = cmd_simulate(o, *sim);

    if (json_out) {
      out << report.data.dump(2) << "\n";
    } else if (!report.text.empty()) {
      out << report.text;
    } else {
      render(report.data, out);
    }
    return report.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RemoteError& e) {
    err << e.body << "\n";
    return kExitDomainError;
  } catch (const Error& e) {
    err << wire::error_envelope(e).dump() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << wire::error_envelope("IoError", e.what()).dump() << "\n";
    return kExitDomainError;
  }
}

}  // namespace evault::cli
