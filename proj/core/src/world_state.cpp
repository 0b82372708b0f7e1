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

#include "evault/world_state.hpp"

#include "evault/encoding.hpp"
#include "evault/error.hpp"

namespace evault {
namespace {

void put_uid(Encoder& e, const Uid& u) { e.hash(u.value); }
Uid get_uid(Decoder& d) { return {d.hash()}; }

void put_uid_set(Encoder& e, const std::set<Uid>& s) {
  e.count(s.size());
  for (const Uid& u : s) put_uid(e, u);
}

std::set<Uid> get_uid_set(Decoder& d) {
  std::set<Uid> out;
  std::size_t n = d.count();
  for (std::size_t i = 0; i < n; ++i) {
    Uid u = get_uid(d);
    if (!out.empty() && !(*out.rbegin() < u)) {
      throw Error(ErrorCode::DecodeError, "uid set not strictly ascending");
    }
    out.insert(out.end(), u);
  }
  return out;
}

template <typename Enum>
Enum get_enum(Decoder& d, Enum max) {
  std::uint64_t v = d.u64();
  if (v > static_cast<std::uint64_t>(max)) {
    throw Error(ErrorCode::DecodeError, "enum tag out of range");
  }
  return static_cast<Enum>(v);
}

void put_case(Encoder& e, const Case& c) {
  e.hash(c.case_id).text(c.case_type).u64(c.case_number);
  put_uid(e, c.petitioner);
  put_uid(e, c.defendant);
  put_uid_set(e, c.lawyers);
  put_uid(e, c.judge);
  e.u64(static_cast<std::uint64_t>(c.status));
  e.boolean(c.next_hearing_at.has_value());
  if (c.next_hearing_at) e.i64(*c.next_hearing_at);
  e.count(c.document_ids.size());
  for (const Hash256& d : c.document_ids) e.hash(d);
}

Case get_case(Decoder& d) {
  Case c;
  c.case_id = d.hash();
  c.case_type = d.text();
  c.case_number = d.u64();
  c.petitioner = get_uid(d);
  c.defendant = get_uid(d);
  c.lawyers = get_uid_set(d);
  c.judge = get_uid(d);
  c.status = get_enum(d, CaseStatus::Closed);
  if (d.boolean()) c.next_hearing_at = d.i64();
  std::size_t n = d.count();
  for (std::size_t i = 0; i < n; ++i) c.document_ids.push_back(d.hash());
  return c;
}

void put_document(Encoder& e, const DocumentRecord& r) {
  e.hash(r.doc_id).hash(r.case_id).text(r.title).hash(r.content_hash)
      .hash(r.manifest_hash).u64(r.size_bytes);
  put_uid(e, r.uploader);
  e.u64(r.uploaded_at_height);
  put_uid_set(e, r.acl);
  e.count(r.custody.size());
  for (const CustodyEvent& ev : r.custody) {
    put_uid(e, ev.from);
    put_uid(e, ev.to);
    e.u64(ev.at_height).text(ev.note);
  }
  e.count(r.signatures.size());
  for (const DocumentSignature& s : r.signatures) {
    put_uid(e, s.signer);
    e.raw(s.signature.bytes).u64(s.height);
  }
}

DocumentRecord get_document(Decoder& d) {
  DocumentRecord r;
  r.doc_id = d.hash();
  r.case_id = d.hash();
  r.title = d.text();
  r.content_hash = d.hash();
  r.manifest_hash = d.hash();
  r.size_bytes = d.u64();
  r.uploader = get_uid(d);
  r.uploaded_at_height = d.u64();
  r.acl = get_uid_set(d);
  std::size_t n = d.count();
  for (std::size_t i = 0; i < n; ++i) {
    CustodyEvent ev;
    ev.from = get_uid(d);
    ev.to = get_uid(d);
    ev.at_height = d.u64();
    ev.note = d.text();
    r.custody.push_back(std::move(ev));
  }
  n = d.count();
  for (std::size_t i = 0; i < n; ++i) {
    DocumentSignature s;
    s.signer = get_uid(d);
    s.signature.bytes = d.raw<64>();
    s.height = d.u64();
    r.signatures.push_back(s);
  }
  return r;
}

}  // namespace

const Identity* WorldState::find_identity(const Uid& uid) const {
  auto it = identities.find(uid);
  return it == identities.end() ? nullptr : &it->second;
}

const Case* WorldState::find_case(const Hash256& id) const {
  auto it = cases.find(id);
  return it == cases.end() ? nullptr : &it->second;
}

const DocumentRecord* WorldState::find_document(const Hash256& id) const {
  auto it = documents.find(id);
  return it == documents.end() ? nullptr : &it->second;
}

std::uint64_t WorldState::last_nonce(const Uid& uid) const {
  auto it = nonces.find(uid);
  return it == nonces.end() ? 0 : it->second;
}

Bytes WorldState::encode() const {
  Encoder e;
  e.count(identities.size());
  for (const auto& [uid, id] : identities) {
    put_uid(e, uid);
    e.u64(static_cast<std::uint64_t>(id.role)).raw(id.public_key.bytes)
        .u64(id.registered_at);
  }
  e.count(cases.size());
  for (const auto& [id, c] : cases) put_case(e, c);
  e.count(documents.size());
  for (const auto& [id, r] : documents) put_document(e, r);
  e.u64(next_case_number);
  e.count(nonces.size());
  for (const auto& [uid, n] : nonces) {
    put_uid(e, uid);
    e.u64(n);
  }
  return e.take();
}

WorldState WorldState::decode(ByteView data) {
  Decoder d(data);
  WorldState s;
  std::size_t n = d.count();
  for (std::size_t i = 0; i < n; ++i) {
    Identity id;
    id.uid = get_uid(d);
    id.role = get_enum(d, Role::Registrar);
    id.public_key.bytes = d.raw<32>();
    id.registered_at = d.u64();
    s.identities.emplace(id.uid, id);
  }
  n = d.count();
  for (std::size_t i = 0; i < n; ++i) {
    Case c = get_case(d);
    Hash256 key = c.case_id;
    s.cases.emplace(key, std::move(c));
  }
  n = d.count();
  for (std::size_t i = 0; i < n; ++i) {
    DocumentRecord r = get_document(d);
    Hash256 key = r.doc_id;
    s.documents.emplace(key, std::move(r));
  }
  s.next_case_number = d.u64();
  n = d.count();
  for (std::size_t i = 0; i < n; ++i) {
    Uid u = get_uid(d);
    s.nonces.emplace(u, d.u64());
  }
  d.finish();
  return s;
}

}  // namespace evault
