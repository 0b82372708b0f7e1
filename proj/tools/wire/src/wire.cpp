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

#include "evault/wire.hpp"

#include <type_traits>

namespace evault::wire {
namespace {

[[noreturn]] void bad(std::string_view what) {
  throw Error(ErrorCode::BadRequest, std::string(what));
}

const json& field(const json& j, std::string_view name) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) bad("missing field '" + std::string(name) + "'");
  return *it;
}

template <typename Fixed>
Fixed fixed_field(const json& j, std::string_view name) {
  const std::string hex = string_field(j, name);
  try {
    return Fixed::from_hex(hex);
  } catch (const Error&) {
    bad("field '" + std::string(name) + "' is not valid hex of the right length");
  }
}

json uid_list(const auto& uids) {
  json out = json::array();
  for (const Uid& u : uids) out.push_back(u.hex());
  return out;
}

std::vector<Uid> uids_field(const json& j, std::string_view name) {
  const json& arr = field(j, name);
  if (!arr.is_array()) bad("field '" + std::string(name) + "' must be an array");
  std::vector<Uid> out;
  for (const json& v : arr) {
    if (!v.is_string()) bad("field '" + std::string(name) + "' must hold hex strings");
    try {
      out.push_back(Uid::from_hex(v.get<std::string>()));
    } catch (const Error&) {
      bad("field '" + std::string(name) + "' holds an invalid uid");
    }
  }
  return out;
}

Role role_field(const json& j, std::string_view name) {
  auto role = parse_role(string_field(j, name));
  if (!role) bad("unknown role '" + string_field(j, name) + "'");
  return *role;
}

CaseStatus status_field(const json& j, std::string_view name) {
  auto status = parse_status(string_field(j, name));
  if (!status) bad("unknown case status '" + string_field(j, name) + "'");
  return *status;
}

}  // namespace

Hash256 hash_field(const json& j, std::string_view name) {
  return fixed_field<Hash256>(j, name);
}

Uid uid_field(const json& j, std::string_view name) {
  return {hash_field(j, name)};
}

std::string string_field(const json& j, std::string_view name) {
  const json& v = field(j, name);
  if (!v.is_string()) bad("field '" + std::string(name) + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t u64_field(const json& j, std::string_view name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    bad("field '" + std::string(name) + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::int64_t i64_field(const json& j, std::string_view name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) bad("field '" + std::string(name) + "' must be an integer");
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    bad("field '" + std::string(name) + "' is out of range");
  }
  return v.get<std::int64_t>();
}

json to_json(const TxPayload& payload) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, tx::RegisterIdentity>) {
          return {{"full_name", p.details.full_name},
                  {"national_id", p.details.national_id},
                  {"role", role_name(p.details.role)},
                  {"contact", p.details.contact},
                  {"public_key", p.public_key.hex()}};
        } else if constexpr (std::is_same_v<T, tx::FileCase>) {
          return {{"case_type", p.case_type},
                  {"petitioner", p.petitioner.hex()},
                  {"defendant", p.defendant.hex()},
                  {"lawyers", uid_list(p.lawyers)}};
        } else if constexpr (std::is_same_v<T, tx::ScheduleHearing>) {
          return {{"case_id", p.case_id.hex()}, {"hearing_at", p.hearing_at}};
        } else if constexpr (std::is_same_v<T, tx::UploadDocument>) {
          return {{"case_id", p.case_id.hex()},
                  {"title", p.title},
                  {"content_hash", p.content_hash.hex()},
                  {"manifest_hash", p.manifest_hash.hex()},
                  {"size_bytes", p.size_bytes}};
        } else if constexpr (std::is_same_v<T, tx::GrantAccess> ||
                             std::is_same_v<T, tx::RevokeAccess>) {
          return {{"doc_id", p.doc_id.hex()}, {"grantee", p.grantee.hex()}};
        } else if constexpr (std::is_same_v<T, tx::TransferCustody>) {
          return {{"doc_id", p.doc_id.hex()}, {"to", p.to.hex()}, {"note", p.note}};
        } else if constexpr (std::is_same_v<T, tx::SignDocument>) {
          return {{"doc_id", p.doc_id.hex()},
                  {"content_signature", p.content_signature.hex()}};
        } else {
          return {{"case_id", p.case_id.hex()},
                  {"status", status_name(p.status)},
                  {"note", p.note}};
        }
      },
      payload);
}

TxPayload payload_from_json(std::string_view kind, const json& j) {
  if (kind == "RegisterIdentity") {
    return tx::RegisterIdentity{
        {string_field(j, "full_name"), string_field(j, "national_id"),
         role_field(j, "role"), string_field(j, "contact")},
        fixed_field<VerifyKey>(j, "public_key")};
  }
  if (kind == "FileCase") {
    return tx::FileCase{string_field(j, "case_type"), uid_field(j, "petitioner"),
                        uid_field(j, "defendant"), uids_field(j, "lawyers")};
  }
  if (kind == "ScheduleHearing") {
    return tx::ScheduleHearing{hash_field(j, "case_id"), i64_field(j, "hearing_at")};
  }
  if (kind == "UploadDocument") {
    return tx::UploadDocument{hash_field(j, "case_id"), string_field(j, "title"),
                              hash_field(j, "content_hash"),
                              hash_field(j, "manifest_hash"), u64_field(j, "size_bytes")};
  }
  if (kind == "GrantAccess") {
    return tx::GrantAccess{hash_field(j, "doc_id"), uid_field(j, "grantee")};
  }
  if (kind == "RevokeAccess") {
    return tx::RevokeAccess{hash_field(j, "doc_id"), uid_field(j, "grantee")};
  }
  if (kind == "TransferCustody") {
    return tx::TransferCustody{hash_field(j, "doc_id"), uid_field(j, "to"),
                               string_field(j, "note")};
  }
  if (kind == "SignDocument") {
    return tx::SignDocument{hash_field(j, "doc_id"),
                            fixed_field<Signature>(j, "content_signature")};
  }
  if (kind == "UpdateCaseStatus") {
    return tx::UpdateCaseStatus{hash_field(j, "case_id"), status_field(j, "status"),
                                string_field(j, "note")};
  }
  bad("unknown transaction kind '" + std::string(kind) + "'");
}

json to_json(const Transaction& tx) {
  return {{"kind", kind_name(tx.payload)},
          {"payload", to_json(tx.payload)},
          {"sender", tx.sender.hex()},
          {"nonce", tx.nonce},
          {"submitted_at", tx.submitted_at},
          {"signature", tx.signature.hex()}};
}

Transaction transaction_from_json(const json& j) {
  Transaction tx;
  tx.payload = payload_from_json(string_field(j, "kind"), field(j, "payload"));
  tx.sender = uid_field(j, "sender");
  tx.nonce = u64_field(j, "nonce");
  tx.submitted_at = i64_field(j, "submitted_at");
  tx.signature = fixed_field<Signature>(j, "signature");
  return tx;
}

json to_json(const Identity& identity) {
  return {{"uid", identity.uid.hex()},
          {"role", role_name(identity.role)},
          {"public_key", identity.public_key.hex()},
          {"registered_at", identity.registered_at}};
}

json to_json(const Case& c) {
  json docs = json::array();
  for (const Hash256& d : c.document_ids) docs.push_back(d.hex());
  return {{"case_id", c.case_id.hex()},
          {"case_type", c.case_type},
          {"case_number", c.case_number},
          {"petitioner", c.petitioner.hex()},
          {"defendant", c.defendant.hex()},
          {"lawyers", uid_list(c.lawyers)},
          {"judge", c.judge.hex()},
          {"status", status_name(c.status)},
          {"next_hearing_at",
           c.next_hearing_at ? json(*c.next_hearing_at) : json(nullptr)},
          {"document_ids", std::move(docs)}};
}

json to_json(const CustodyEvent& event) {
  return {{"from", event.from.hex()},
          {"to", event.to.hex()},
          {"at_height", event.at_height},
          {"note", event.note}};
}

json to_json(const DocumentRecord& doc) {
  json custody = json::array();
  for (const CustodyEvent& e : doc.custody) custody.push_back(to_json(e));
  json signatures = json::array();
  for (const DocumentSignature& s : doc.signatures) {
    signatures.push_back({{"signer", s.signer.hex()},
                          {"signature", s.signature.hex()},
                          {"height", s.height}});
  }
  return {{"doc_id", doc.doc_id.hex()},
          {"case_id", doc.case_id.hex()},
          {"title", doc.title},
          {"content_hash", doc.content_hash.hex()},
          {"manifest_hash", doc.manifest_hash.hex()},
          {"size_bytes", doc.size_bytes},
          {"uploader", doc.uploader.hex()},
          {"uploaded_at_height", doc.uploaded_at_height},
          {"custodian", doc.current_custodian().hex()},
          {"acl", uid_list(doc.acl)},
          {"custody", std::move(custody)},
          {"signatures", std::move(signatures)}};
}

json to_json(const BlockHeader& header) {
  return {{"height", header.height},
          {"parent_hash", header.parent_hash.hex()},
          {"merkle_root", header.merkle_root.hex()},
          {"timestamp", header.timestamp},
          {"proposer", header.proposer.hex()},
          {"nonce", header.nonce}};
}

json to_json(const Block& block) {
  json txs = json::array();
  for (const Transaction& tx : block.transactions) txs.push_back(to_json(tx));
  return {{"hash", block.hash().hex()},
          {"header", to_json(block.header)},
          {"transactions", std::move(txs)},
          {"signature", block.signature.hex()}};
}

Block block_from_json(const json& j) {
  Block block;
  const json& h = field(j, "header");
  block.header.height = u64_field(h, "height");
  block.header.parent_hash = hash_field(h, "parent_hash");
  block.header.merkle_root = hash_field(h, "merkle_root");
  block.header.timestamp = i64_field(h, "timestamp");
  block.header.proposer = uid_field(h, "proposer");
  block.header.nonce = u64_field(h, "nonce");
  const json& txs = field(j, "transactions");
  if (!txs.is_array()) bad("field 'transactions' must be an array");
  for (const json& t : txs) block.transactions.push_back(transaction_from_json(t));
  block.signature = fixed_field<Signature>(j, "signature");
  return block;
}

json to_json(const ObjectManifest& manifest) {
  json entries = json::array();
  for (const ManifestEntry& e : manifest.entries) {
    entries.push_back({{"cipher_hash", e.cipher_hash.hex()}, {"key", to_hex(e.key)}});
  }
  return {{"content_hash", manifest.content_hash.hex()},
          {"total_size", manifest.total_size},
          {"chunk_size", manifest.chunk_size},
          {"entries", std::move(entries)}};
}

ObjectManifest manifest_from_json(const json& j) {
  ObjectManifest m;
  m.content_hash = hash_field(j, "content_hash");
  m.total_size = u64_field(j, "total_size");
  m.chunk_size = u64_field(j, "chunk_size");
  const json& entries = field(j, "entries");
  if (!entries.is_array()) bad("field 'entries' must be an array");
  for (const json& e : entries) {
    m.entries.push_back({hash_field(e, "cipher_hash"), hash_field(e, "key").bytes});
  }
  return m;
}

json error_envelope(std::string_view code, std::string_view message) {
  return {{"code", code}, {"message", message}};
}

json error_envelope(const Error& error) {
  return error_envelope(error_name(error.code()), error.what());
}

}  // namespace evault::wire
