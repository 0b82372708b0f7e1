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

#ifndef EVAULT_TRANSACTION_HPP_
#define EVAULT_TRANSACTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evault/hash.hpp"
#include "evault/identity.hpp"

namespace evault {

enum class CaseStatus : std::uint8_t { Filed = 0, InHearing = 1, Decided = 2, Closed = 3 };

std::string_view status_name(CaseStatus status);
std::optional<CaseStatus> parse_status(std::string_view name);

namespace tx {

struct RegisterIdentity {
  IdentityDetails details;
  VerifyKey public_key;
  friend bool operator==(const RegisterIdentity&, const RegisterIdentity&) = default;
};

struct FileCase {
  std::string case_type;
  Uid petitioner;
  Uid defendant;
  std::vector<Uid> lawyers;
  friend bool operator==(const FileCase&, const FileCase&) = default;
};

struct ScheduleHearing {
  Hash256 case_id;
  std::int64_t hearing_at = 0;
  friend bool operator==(const ScheduleHearing&, const ScheduleHearing&) = default;
};

struct UploadDocument {
  Hash256 case_id;
  std::string title;
  Hash256 content_hash;
  Hash256 manifest_hash;
  std::uint64_t size_bytes = 0;
  friend bool operator==(const UploadDocument&, const UploadDocument&) = default;
};

struct GrantAccess {
  Hash256 doc_id;
  Uid grantee;
  friend bool operator==(const GrantAccess&, const GrantAccess&) = default;
};

struct RevokeAccess {
  Hash256 doc_id;
  Uid grantee;
  friend bool operator==(const RevokeAccess&, const RevokeAccess&) = default;
};

struct TransferCustody {
  Hash256 doc_id;
  Uid to;
  std::string note;
  friend bool operator==(const TransferCustody&, const TransferCustody&) = default;
};

// content_signature is the signer's signature over the document's 32-byte
// content hash; it is what gets recorded on the document.
struct SignDocument {
  Hash256 doc_id;
  Signature content_signature;
  friend bool operator==(const SignDocument&, const SignDocument&) = default;
};

struct UpdateCaseStatus {
  Hash256 case_id;
  CaseStatus status = CaseStatus::Filed;
  std::string note;
  friend bool operator==(const UpdateCaseStatus&, const UpdateCaseStatus&) = default;
};

}  // namespace tx

// Variant order is the on-wire kind tag; append only.
using TxPayload =
    std::variant<tx::RegisterIdentity, tx::FileCase, tx::ScheduleHearing,
                 tx::UploadDocument, tx::GrantAccess, tx::RevokeAccess,
                 tx::TransferCustody, tx::SignDocument, tx::UpdateCaseStatus>;

std::string_view kind_name(const TxPayload& payload);

struct Transaction {
  TxPayload payload;
  Uid sender;
  std::uint64_t nonce = 0;
  std::int64_t submitted_at = 0;  // ms since epoch
  Signature signature;

  /// Canonical encoding of every field except the signature.
  Bytes signing_bytes() const;
  /// keccak256 of the full canonical encoding, signature included.
  Hash256 hash() const;

  void encode(Encoder& enc) const;
  static Transaction decode(Decoder& dec);
  Bytes encode() const;
  static Transaction decode(ByteView data);

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

Transaction make_transaction(TxPayload payload, const Uid& sender,
                             std::uint64_t nonce, std::int64_t submitted_at,
                             const SigningKey& key);

}  // namespace evault

#endif  // EVAULT_TRANSACTION_HPP_
