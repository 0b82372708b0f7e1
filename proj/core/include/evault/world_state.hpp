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

#ifndef EVAULT_WORLD_STATE_HPP_
#define EVAULT_WORLD_STATE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evault/hash.hpp"
#include "evault/identity.hpp"
#include "evault/transaction.hpp"

namespace evault {

struct Case {
  Hash256 case_id;  // hash of the filing transaction
  std::string case_type;
  std::uint64_t case_number = 0;  // dense from 1
  Uid petitioner;
  Uid defendant;
  std::set<Uid> lawyers;
  Uid judge;
  CaseStatus status = CaseStatus::Filed;
  std::optional<std::int64_t> next_hearing_at;
  std::vector<Hash256> document_ids;  // upload order

  friend bool operator==(const Case&, const Case&) = default;
};

struct CustodyEvent {
  Uid from;
  Uid to;
  std::uint64_t at_height = 0;
  std::string note;

  friend bool operator==(const CustodyEvent&, const CustodyEvent&) = default;
};

struct DocumentSignature {
  Uid signer;
  Signature signature;  // over the document's content_hash
  std::uint64_t height = 0;

  friend bool operator==(const DocumentSignature&, const DocumentSignature&) = default;
};

struct DocumentRecord {
  Hash256 doc_id;  // hash of the upload transaction
  Hash256 case_id;
  std::string title;
  Hash256 content_hash;
  Hash256 manifest_hash;
  std::uint64_t size_bytes = 0;
  Uid uploader;
  std::uint64_t uploaded_at_height = 0;
  std::set<Uid> acl;
  std::vector<CustodyEvent> custody;  // transfers only; append-only
  std::vector<DocumentSignature> signatures;

  /// Uploader until the first transfer, then the last recipient.
  const Uid& current_custodian() const {
    return custody.empty() ? uploader : custody.back().to;
  }

  friend bool operator==(const DocumentRecord&, const DocumentRecord&) = default;
};

/// Materialised view of the ledger. Ordered maps give the canonical encoding
/// its ascending-key order for free.
struct WorldState {
  std::map<Uid, Identity> identities;
  std::map<Hash256, Case> cases;
  std::map<Hash256, DocumentRecord> documents;
  std::uint64_t next_case_number = 1;
  std::map<Uid, std::uint64_t> nonces;  // last accepted nonce per sender

  const Identity* find_identity(const Uid& uid) const;
  const Case* find_case(const Hash256& id) const;
  const DocumentRecord* find_document(const Hash256& id) const;
  std::uint64_t last_nonce(const Uid& uid) const;

  Bytes encode() const;
  static WorldState decode(ByteView data);
  Hash256 state_hash() const { return keccak256(encode()); }

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

}  // namespace evault

#endif  // EVAULT_WORLD_STATE_HPP_
