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

#include "evault/http_api.hpp"

#include <charconv>
#include <vector>

#include "evault/contracts.hpp"
#include "evault/wire.hpp"

namespace evault {
namespace {

using wire::json;

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < path.size()) {
    while (i < path.size() && path[i] == '/') ++i;
    std::size_t j = path.find('/', i);
    if (j == std::string::npos) j = path.size();
    if (j > i) parts.push_back(path.substr(i, j - i));
    i = j;
  }
  return parts;
}

ApiResponse json_response(const json& body, int status = 200) {
  return {status, "application/json", body.dump()};
}

ApiResponse error_response(ErrorCode code, std::string_view message) {
  return json_response(wire::error_envelope(error_name(code), message), http_status(code));
}

json parse_body(const std::string& body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::BadRequest, "request body must be a JSON object");
  }
  return j;
}

Hash256 hash_segment(const std::string& s, std::string_view what) {
  try {
    return Hash256::from_hex(s);
  } catch (const Error&) {
    throw Error(ErrorCode::BadRequest, std::string(what) + " must be 64 hex characters");
  }
}

std::uint64_t height_segment(const std::string& s) {
  std::uint64_t h = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), h);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::BadRequest, "block height must be a decimal integer");
  }
  return h;
}

json case_list(const std::vector<Case>& cases) {
  json out = json::array();
  for (const Case& c : cases) out.push_back(wire::to_json(c));
  return out;
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadRequest:
    case ErrorCode::DecodeError:
    case ErrorCode::BadHex:
    case ErrorCode::MissingChunk:
    case ErrorCode::EmptyObject:
      return 400;
    case ErrorCode::Unauthorized:
    case ErrorCode::BadChallengeSignature:
    case ErrorCode::ExpiredChallenge:
      return 401;
    case ErrorCode::PermissionDenied:
    case ErrorCode::WrongRole:
      return 403;
    case ErrorCode::NotFound:
    case ErrorCode::UnknownUID:
    case ErrorCode::UnknownCase:
    case ErrorCode::UnknownDocument:
    case ErrorCode::ManifestUnavailable:
      return 404;
    case ErrorCode::MempoolFull:
    case ErrorCode::ShuttingDown:
      return 503;
    case ErrorCode::IoError:
    case ErrorCode::StoreWriteFailure:
    case ErrorCode::IntegrityFailure:
    case ErrorCode::CorruptLog:
      return 500;
    default:
      return 422;
  }
}

ApiResponse HttpApi::handle(const ApiRequest& request) {
  try {
    return route(request);
  } catch (const Error& e) {
    return error_response(e.code(), e.what());
  } catch (const std::exception& e) {
    return error_response(ErrorCode::IoError, e.what());
  }
}

Uid HttpApi::require_session(const ApiRequest& request) const {
  if (!request.token) {
    throw Error(ErrorCode::Unauthorized, "a bearer session token is required");
  }
  auto uid = service_.session_uid(*request.token);
  if (!uid) throw Error(ErrorCode::Unauthorized, "session token is unknown or expired");
  return *uid;
}

ApiResponse HttpApi::route(const ApiRequest& req) {
  const std::vector<std::string> p = split_path(req.path);
  const bool get = req.method == "GET";
  const bool post = req.method == "POST";
  auto n = p.size();

  if (post && n == 2 && p[0] == "auth" && p[1] == "challenge") {
    const json body = parse_body(req.body);
    const auto challenge = service_.issue_challenge(wire::uid_field(body, "uid"));
    return json_response({{"challenge", to_hex(challenge)}});
  }
  if (post && n == 2 && p[0] == "auth" && p[1] == "session") {
    const json body = parse_body(req.body);
    const Uid uid = wire::uid_field(body, "uid");
    Bytes sig;
    try {
      sig = from_hex(wire::string_field(body, "signature"));
    } catch (const Error&) {
      throw Error(ErrorCode::BadRequest, "signature must be hex");
    }
    const SessionToken token = service_.open_session(uid, sig);
    return json_response({{"token", token.hex()}, {"expires_at", token.expires_at}});
  }
  if (post && n == 1 && p[0] == "tx") {
    const Transaction tx = wire::transaction_from_json(parse_body(req.body));
    const Receipt r = service_.submit_transaction(tx);
    return json_response({{"block_height", r.block_height}, {"tx_hash", r.tx_hash.hex()}});
  }
  if (post && n == 1 && p[0] == "files") {
    require_session(req);
    if (req.body.empty()) throw Error(ErrorCode::EmptyObject, "chunk body is empty");
    const Hash256 h = keccak256(as_bytes(req.body));
    const bool stored = service_.chunks().put(h, as_bytes(req.body));
    return json_response({{"cipher_hash", h.hex()}, {"stored", stored}});
  }
  if (post && n == 1 && p[0] == "manifests") {
    require_session(req);
    const ObjectManifest m = wire::manifest_from_json(parse_body(req.body));
    for (const ManifestEntry& e : m.entries) {
      if (!service_.chunks().contains(e.cipher_hash)) {
        throw Error(ErrorCode::MissingChunk, "chunk " + e.cipher_hash.hex() + " is not stored");
      }
    }
    service_.store_manifest(m);
    return json_response({{"manifest_hash", m.manifest_hash().hex()}});
  }

  if (!get) throw Error(ErrorCode::NotFound, "no route for " + req.method + " " + req.path);

  if (n == 2 && p[0] == "chain" && p[1] == "head") {
    const CommittedView v = service_.view();
    json auths = json::array();
    for (const Authority& a : service_.authorities().members()) {
      auths.push_back({{"node_id", a.node_id},
                       {"proposer", a.proposer.hex()},
                       {"public_key", a.key.hex()}});
    }
    return json_response({{"height", v.height},
                          {"hash", v.tip_hash.hex()},
                          {"timestamp", v.tip_timestamp},
                          {"authorities", std::move(auths)}});
  }
  if (n == 3 && p[0] == "chain" && p[1] == "blocks") {
    auto block = service_.block_at(height_segment(p[2]));
    if (!block) throw Error(ErrorCode::NotFound, "no block at height " + p[2]);
    return json_response(wire::to_json(*block));
  }
  if (n == 2 && p[0] == "identities") {
    Uid uid;
    uid.value = hash_segment(p[1], "uid");
    const CommittedView v = service_.view();
    const Identity* id = v.state->find_identity(uid);
    if (id == nullptr) throw Error(ErrorCode::UnknownUID, "uid " + p[1] + " is not registered");
    json out = wire::to_json(*id);
    out["last_nonce"] = v.state->last_nonce(uid);
    return json_response(out);
  }
  if (n == 3 && p[0] == "docs" && p[2] == "verify") {
    auto it = req.query.find("hash");
    if (it == req.query.end()) throw Error(ErrorCode::BadRequest, "query parameter 'hash' is required");
    const Hash256 doc = hash_segment(p[1], "doc id");
    const Hash256 content = hash_segment(it->second, "hash");
    const CommittedView v = service_.view();
    return json_response(
        {{"verdict", verdict_name(verify_document_hash(*v.state, doc, content))}});
  }

  const bool private_route = (p[0] == "cases" && (n == 1 || n == 2)) ||
                             (p[0] == "docs" && (n == 2 || (n == 3 && p[2] == "content")));
  if (n == 0 || !private_route) throw Error(ErrorCode::NotFound, "no route for GET " + req.path);

  const Uid me = require_session(req);
  const CommittedView v = service_.view();
  const WorldState& state = *v.state;

  if (n == 1 && p[0] == "cases") {
    auto it = req.query.find("role_view");
    if (it == req.query.end()) {
      throw Error(ErrorCode::BadRequest, "query parameter 'role_view' is required");
    }
    if (it->second == "judge") return json_response(case_list(pending_cases_for_judge(state, me)));
    if (it->second == "lawyer") return json_response(case_list(upcoming_cases_for_lawyer(state, me)));
    if (it->second == "citizen") return json_response(case_list(cases_for_citizen(state, me)));
    throw Error(ErrorCode::BadRequest, "role_view must be judge, lawyer or citizen");
  }
  if (n == 2 && p[0] == "cases" && p[1] == "search") {
    auto it = req.query.find("q");
    return json_response(case_list(search_cases(state, it == req.query.end() ? "" : it->second)));
  }
  if (n == 2 && p[0] == "cases") {
    const Case* c = state.find_case(hash_segment(p[1], "case id"));
    if (c == nullptr) throw Error(ErrorCode::UnknownCase, "no case " + p[1]);
    return json_response(wire::to_json(*c));
  }
  if ((n == 2 || n == 3) && p[0] == "docs") {
    const Hash256 id = hash_segment(p[1], "doc id");
    const DocumentRecord* doc = state.find_document(id);
    if (doc == nullptr) throw Error(ErrorCode::UnknownDocument, "no document " + p[1]);
    if (!check_permission(state, me, Action::ReadDocument, id)) {
      throw Error(ErrorCode::PermissionDenied, "document is outside this session's access list");
    }
    if (n == 2) return json_response(wire::to_json(*doc));
    {
      auto manifest = service_.load_manifest(doc->manifest_hash);
      if (!manifest) {
        throw Error(ErrorCode::ManifestUnavailable,
                    "no manifest " + doc->manifest_hash.hex() + " on this server");
      }
      if (manifest->content_hash != doc->content_hash) {
        throw Error(ErrorCode::IntegrityFailure, "stored manifest does not match the ledger");
      }
      Bytes data = get_object(service_.chunks(), *manifest);
      return {200, "application/octet-stream", std::string(data.begin(), data.end())};
    }
  }
  throw Error(ErrorCode::NotFound, "no route for GET " + req.path);
}

}  // namespace evault
