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

#include "evault/contracts.hpp"

#include <algorithm>
#include <limits>

namespace evault {
namespace {

bool is_registrar_action(Action a) {
  return a == Action::RegisterIdentity || a == Action::FileCase;
}

bool is_case_action(Action a) {
  return a == Action::ScheduleHearing || a == Action::UpdateCaseStatus ||
         a == Action::UploadDocument;
}

bool is_party(const Case& c, const Uid& uid) {
  return c.petitioner == uid || c.defendant == uid;
}

bool is_counsel(const Case& c, const Uid& uid) { return c.lawyers.count(uid) > 0; }

bool in_acl_floor(const DocumentRecord& doc, const Case& c, const Uid& uid) {
  return uid == doc.uploader || uid == c.judge || is_counsel(c, uid);
}

bool case_permission(const Identity& actor, Action action, const Case& c) {
  switch (action) {
    case Action::ScheduleHearing:
    case Action::UpdateCaseStatus:
      return actor.role == Role::Judge && c.judge == actor.uid;
    case Action::UploadDocument:
      return actor.role == Role::Lawyer && is_counsel(c, actor.uid);
    default:
      return false;
  }
}

bool document_permission(const Identity& actor, Action action,
                         const DocumentRecord& doc, const Case& c) {
  const bool judge_of_case = actor.role == Role::Judge && c.judge == actor.uid;
  const bool counsel = actor.role == Role::Lawyer && is_counsel(c, actor.uid);
  switch (action) {
    case Action::GrantAccess:
      return judge_of_case || counsel;
    case Action::RevokeAccess:
      return judge_of_case;
    case Action::TransferCustody:
      return counsel;
    case Action::SignDocument:
      return counsel || (actor.role == Role::Citizen && is_party(c, actor.uid));
    case Action::ReadDocument:
      return doc.acl.count(actor.uid) > 0;
    default:
      return false;
  }
}

struct Resource {
  Action action;
  std::optional<Hash256> id;
};

Resource resource_of(const TxPayload& payload) {
  struct Visitor {
    Resource operator()(const tx::RegisterIdentity&) const {
      return {Action::RegisterIdentity, std::nullopt};
    }
    Resource operator()(const tx::FileCase&) const {
      return {Action::FileCase, std::nullopt};
    }
    Resource operator()(const tx::ScheduleHearing& p) const {
      return {Action::ScheduleHearing, p.case_id};
    }
    Resource operator()(const tx::UpdateCaseStatus& p) const {
      return {Action::UpdateCaseStatus, p.case_id};
    }
    Resource operator()(const tx::UploadDocument& p) const {
      return {Action::UploadDocument, p.case_id};
    }
    Resource operator()(const tx::GrantAccess& p) const {
      return {Action::GrantAccess, p.doc_id};
    }
    Resource operator()(const tx::RevokeAccess& p) const {
      return {Action::RevokeAccess, p.doc_id};
    }
    Resource operator()(const tx::TransferCustody& p) const {
      return {Action::TransferCustody, p.doc_id};
    }
    Resource operator()(const tx::SignDocument& p) const {
      return {Action::SignDocument, p.doc_id};
    }
  };
  return std::visit(Visitor{}, payload);
}

TxRejection reject(ErrorCode code, std::string message) {
  return {code, std::move(message)};
}

bool has_registrar(const WorldState& s) {
  return std::any_of(s.identities.begin(), s.identities.end(), [](const auto& kv) {
    return kv.second.role == Role::Registrar;
  });
}

bool key_in_use(const WorldState& s, const VerifyKey& key) {
  return std::any_of(s.identities.begin(), s.identities.end(),
                     [&](const auto& kv) { return kv.second.public_key == key; });
}

// The very first registrar cannot be onboarded by another registrar, so a
// registry without one accepts a self-signed registrar registration whose
// sender uid is derived from the payload itself.
bool is_bootstrap(const WorldState& s, const Transaction& t) {
  const auto* reg = std::get_if<tx::RegisterIdentity>(&t.payload);
  if (reg == nullptr || reg->details.role != Role::Registrar) return false;
  if (has_registrar(s)) return false;
  try {
    return derive_uid(reg->details) == t.sender;
  } catch (const Error&) {
    return false;
  }
}

std::optional<Uid> pick_judge(const WorldState& s) {
  std::map<Uid, std::size_t> open;
  for (const auto& [uid, id] : s.identities) {
    if (id.role == Role::Judge) open.emplace(uid, 0);
  }
  if (open.empty()) return std::nullopt;
  for (const auto& [id, c] : s.cases) {
    if (c.status != CaseStatus::Closed) {
      auto it = open.find(c.judge);
      if (it != open.end()) ++it->second;
    }
  }
  // Map iteration is ascending by uid, so strict less keeps the lowest uid.
  auto best = open.begin();
  for (auto it = open.begin(); it != open.end(); ++it) {
    if (it->second < best->second) best = it;
  }
  return best->first;
}

// Validation and mutation for each kind. Each returns a rejection before
// touching the state, so mutations below the checks cannot half-apply.
struct Applier {
  WorldState& s;
  const Transaction& t;
  std::uint64_t height;

  std::optional<TxRejection> operator()(const tx::RegisterIdentity& p) const {
    Uid uid;
    try {
      uid = derive_uid(p.details);
    } catch (const Error& e) {
      return reject(e.code(), e.what());
    }
    if (s.identities.count(uid) > 0) {
      return reject(ErrorCode::DuplicateIdentity,
                    "identity " + uid.hex() + " already registered");
    }
    if (key_in_use(s, p.public_key)) {
      return reject(ErrorCode::DuplicateIdentity,
                    "public key already bound to another identity");
    }
    s.identities.emplace(uid, Identity{uid, p.details.role, p.public_key, height});
    return std::nullopt;
  }

  std::optional<TxRejection> operator()(const tx::FileCase& p) const {
    if (p.case_type.empty()) {
      return reject(ErrorCode::InvalidTransaction, "case_type must not be empty");
    }
    for (const Uid* party : {&p.petitioner, &p.defendant}) {
      if (s.find_identity(*party) == nullptr) {
        return reject(ErrorCode::UnknownActor,
                      "party " + party->hex() + " is not registered");
      }
    }
    if (p.petitioner == p.defendant) {
      return reject(ErrorCode::InvalidTransaction,
                    "petitioner and defendant must differ");
    }
    for (const Uid& l : p.lawyers) {
      const Identity* id = s.find_identity(l);
      if (id == nullptr) {
        return reject(ErrorCode::UnknownActor,
                      "lawyer " + l.hex() + " is not registered");
      }
      if (id->role != Role::Lawyer) {
        return reject(ErrorCode::WrongRole, l.hex() + " is not a lawyer");
      }
    }
    std::optional<Uid> judge = pick_judge(s);
    if (!judge) {
      return reject(ErrorCode::InvalidTransaction, "no registered judge");
    }
    Case c;
    c.case_id = t.hash();
    c.case_type = p.case_type;
    c.case_number = s.next_case_number;
    c.petitioner = p.petitioner;
    c.defendant = p.defendant;
    c.lawyers.insert(p.lawyers.begin(), p.lawyers.end());
    c.judge = *judge;
    ++s.next_case_number;
    Hash256 id = c.case_id;
    s.cases.emplace(id, std::move(c));
    return std::nullopt;
  }

  std::optional<TxRejection> operator()(const tx::ScheduleHearing& p) const {
    Case& c = s.cases.at(p.case_id);
    if (c.status == CaseStatus::Closed) {
      return reject(ErrorCode::IllegalStatusTransition,
                    "cannot schedule a hearing on a closed case");
    }
    c.next_hearing_at = p.hearing_at;
    return std::nullopt;
  }

  std::optional<TxRejection> operator()(const tx::UpdateCaseStatus& p) const {
    Case& c = s.cases.at(p.case_id);
    auto from = static_cast<int>(c.status);
    auto to = static_cast<int>(p.status);
    if (to != from && to != from + 1) {
      return reject(ErrorCode::IllegalStatusTransition,
                    std::string("cannot move case from ") +
                        std::string(status_name(c.status)) + " to " +
                        std::string(status_name(p.status)));
    }
    c.status = p.status;
    return std::nullopt;
  }

  std::optional<TxRejection> operator()(const tx::UploadDocument& p) const {
    Case& c = s.cases.at(p.case_id);
    DocumentRecord doc;
    doc.doc_id = t.hash();
    if (s.documents.count(doc.doc_id) > 0) {
      return reject(ErrorCode::InvalidTransaction, "document already exists");
    }
    doc.case_id = p.case_id;
    doc.title = p.title;
    doc.content_hash = p.content_hash;
    doc.manifest_hash = p.manifest_hash;
    doc.size_bytes = p.size_bytes;
    doc.uploader = t.sender;
    doc.uploaded_at_height = height;
    doc.acl.insert(t.sender);
    doc.acl.insert(c.judge);
    doc.acl.insert(c.lawyers.begin(), c.lawyers.end());
    c.document_ids.push_back(doc.doc_id);
    Hash256 id = doc.doc_id;
    s.documents.emplace(id, std::move(doc));
    return std::nullopt;
  }

  std::optional<TxRejection> operator()(const tx::GrantAccess& p) const {
    if (s.find_identity(p.grantee) == nullptr) {
      return reject(ErrorCode::UnknownActor,
                    "grantee " + p.grantee.hex() + " is not registered");
    }
    s.documents.at(p.doc_id).acl.insert(p.grantee);
    return std::nullopt;
  }

  std::optional<TxRejection> operator()(const tx::RevokeAccess& p) const {
    DocumentRecord& doc = s.documents.at(p.doc_id);
    if (in_acl_floor(doc, s.cases.at(doc.case_id), p.grantee)) {
      return reject(ErrorCode::PermissionDenied,
                    "uploader, judge and counsel cannot be removed from the acl");
    }
    doc.acl.erase(p.grantee);
    return std::nullopt;
  }

  std::optional<TxRejection> operator()(const tx::TransferCustody& p) const {
    DocumentRecord& doc = s.documents.at(p.doc_id);
    if (doc.current_custodian() != t.sender) {
      return reject(ErrorCode::CustodyMismatch,
                    "sender is not the current custodian " +
                        doc.current_custodian().hex());
    }
    if (s.find_identity(p.to) == nullptr) {
      return reject(ErrorCode::UnknownActor,
                    "recipient " + p.to.hex() + " is not registered");
    }
    if (p.to == t.sender) {
      return reject(ErrorCode::InvalidTransaction,
                    "custody transfer to the current custodian");
    }
    doc.custody.push_back({t.sender, p.to, height, p.note});
    return std::nullopt;
  }

  std::optional<TxRejection> operator()(const tx::SignDocument& p) const {
    DocumentRecord& doc = s.documents.at(p.doc_id);
    const Identity& signer = s.identities.at(t.sender);
    if (!verify(signer.public_key, doc.content_hash.bytes, p.content_signature)) {
      return reject(ErrorCode::BadSignature,
                    "content signature does not verify against content_hash");
    }
    bool already = std::any_of(
        doc.signatures.begin(), doc.signatures.end(),
        [&](const DocumentSignature& d) { return d.signer == t.sender; });
    if (already) {
      return reject(ErrorCode::InvalidTransaction,
                    "document already signed by this identity");
    }
    doc.signatures.push_back({t.sender, p.content_signature, height});
    return std::nullopt;
  }
};

}  // namespace

std::string_view action_name(Action action) {
  switch (action) {
    case Action::RegisterIdentity:
      return "RegisterIdentity";
    case Action::FileCase:
      return "FileCase";
    case Action::ScheduleHearing:
      return "ScheduleHearing";
    case Action::UpdateCaseStatus:
      return "UpdateCaseStatus";
    case Action::UploadDocument:
      return "UploadDocument";
    case Action::GrantAccess:
      return "GrantAccess";
    case Action::RevokeAccess:
      return "RevokeAccess";
    case Action::TransferCustody:
      return "TransferCustody";
    case Action::SignDocument:
      return "SignDocument";
    case Action::ReadDocument:
      return "ReadDocument";
    case Action::ModifyDocument:
      return "ModifyDocument";
  }
  return "Unknown";
}

bool check_permission(const WorldState& state, const Uid& actor, Action action,
                      const std::optional<Hash256>& resource) {
  const Identity* id = state.find_identity(actor);
  if (id == nullptr) {
    throw Error(ErrorCode::UnknownActor, "actor " + actor.hex() + " is not registered");
  }
  if (is_registrar_action(action)) return id->role == Role::Registrar;
  if (!resource) {
    throw Error(ErrorCode::UnknownResource,
                std::string(action_name(action)) + " requires a resource id");
  }
  if (is_case_action(action)) {
    const Case* c = state.find_case(*resource);
    if (c == nullptr) {
      throw Error(ErrorCode::UnknownResource, "no case " + resource->hex());
    }
    return case_permission(*id, action, *c);
  }
  const DocumentRecord* doc = state.find_document(*resource);
  if (doc == nullptr) {
    throw Error(ErrorCode::UnknownResource, "no document " + resource->hex());
  }
  if (action == Action::ModifyDocument) return false;
  return document_permission(*id, action, *doc, state.cases.at(doc->case_id));
}

std::optional<TxRejection> apply_transaction_in_place(WorldState& state,
                                                      const Transaction& tx,
                                                      std::uint64_t height) {
  const Bytes message = tx.signing_bytes();
  if (is_bootstrap(state, tx)) {
    const auto& reg = std::get<tx::RegisterIdentity>(tx.payload);
    if (!verify(reg.public_key, message, tx.signature)) {
      return reject(ErrorCode::BadSignature, "bootstrap registration signature invalid");
    }
  } else {
    const Identity* sender = state.find_identity(tx.sender);
    if (sender == nullptr) {
      return reject(ErrorCode::UnknownActor,
                    "sender " + tx.sender.hex() + " is not registered");
    }
    if (!verify(sender->public_key, message, tx.signature)) {
      return reject(ErrorCode::BadSignature, "transaction signature invalid");
    }
  }

  const std::uint64_t last = state.last_nonce(tx.sender);
  if (last == std::numeric_limits<std::uint64_t>::max() || tx.nonce != last + 1) {
    return reject(ErrorCode::BadNonce, "expected nonce " + std::to_string(last + 1) +
                                           ", got " + std::to_string(tx.nonce));
  }

  const Resource res = resource_of(tx.payload);
  if (res.id) {
    if (is_case_action(res.action) && state.find_case(*res.id) == nullptr) {
      return reject(ErrorCode::UnknownCase, "no case " + res.id->hex());
    }
    if (!is_case_action(res.action) && state.find_document(*res.id) == nullptr) {
      return reject(ErrorCode::UnknownDocument, "no document " + res.id->hex());
    }
  }
  if (!is_bootstrap(state, tx) &&
      !check_permission(state, tx.sender, res.action, res.id)) {
    return reject(ErrorCode::PermissionDenied,
                  std::string(kind_name(tx.payload)) + " not permitted for " +
                      std::string(role_name(state.identities.at(tx.sender).role)));
  }

  auto rejection = std::visit(Applier{state, tx, height}, tx.payload);
  if (rejection) return rejection;
  state.nonces[tx.sender] = tx.nonce;
  return std::nullopt;
}

ApplyResult apply_transaction(const WorldState& state, const Transaction& tx,
                              std::uint64_t height) {
  ApplyResult out{state, std::nullopt};
  out.rejection = apply_transaction_in_place(out.state, tx, height);
  if (out.rejection) out.state = state;
  return out;
}

std::optional<BlockRejection> apply_block(WorldState& state, const Block& block) {
  WorldState next = state;
  for (std::size_t i = 0; i < block.transactions.size(); ++i) {
    auto r = apply_transaction_in_place(next, block.transactions[i],
                                        block.header.height);
    if (r) return BlockRejection{block.header.height, i, std::move(*r)};
  }
  state = std::move(next);
  return std::nullopt;
}

ReplayResult replay_chain(std::span<const Block> blocks) {
  ReplayResult out;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    out.failure = apply_block(out.state, blocks[i]);
    if (out.failure) break;
  }
  return out;
}

std::string_view verdict_name(DocumentVerdict verdict) {
  switch (verdict) {
    case DocumentVerdict::Match:
      return "Match";
    case DocumentVerdict::Tampered:
      return "Tampered";
    case DocumentVerdict::UnknownDocument:
      return "UnknownDocument";
  }
  return "Unknown";
}

DocumentVerdict verify_document_hash(const WorldState& state,
                                     const Hash256& doc_id,
                                     const Hash256& content_hash) {
  const DocumentRecord* doc = state.find_document(doc_id);
  if (doc == nullptr) return DocumentVerdict::UnknownDocument;
  return doc->content_hash == content_hash ? DocumentVerdict::Match
                                           : DocumentVerdict::Tampered;
}

DocumentVerdict verify_document(const WorldState& state, const Hash256& doc_id,
                                ByteView file_bytes) {
  return verify_document_hash(state, doc_id, keccak256(file_bytes));
}

const std::vector<CustodyEvent>& custody_history(const WorldState& state,
                                                 const Hash256& doc_id) {
  const DocumentRecord* doc = state.find_document(doc_id);
  if (doc == nullptr) {
    throw Error(ErrorCode::UnknownDocument, "no document " + doc_id.hex());
  }
  return doc->custody;
}

}  // namespace evault
