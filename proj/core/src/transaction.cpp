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

#include "evault/transaction.hpp"

#include <algorithm>
#include <cctype>

#include "evault/encoding.hpp"
#include "evault/error.hpp"

namespace evault {
namespace {

void encode_uid(Encoder& enc, const Uid& uid) { enc.hash(uid.value); }
Uid decode_uid(Decoder& dec) { return {dec.hash()}; }

struct PayloadEncoder {
  Encoder& enc;

  void operator()(const tx::RegisterIdentity& p) const {
    p.details.encode(enc);
    enc.raw(p.public_key.bytes);
  }
  void operator()(const tx::FileCase& p) const {
    enc.text(p.case_type);
    encode_uid(enc, p.petitioner);
    encode_uid(enc, p.defendant);
    enc.count(p.lawyers.size());
    for (const Uid& l : p.lawyers) encode_uid(enc, l);
  }
  void operator()(const tx::ScheduleHearing& p) const {
    enc.hash(p.case_id).i64(p.hearing_at);
  }
  void operator()(const tx::UploadDocument& p) const {
    enc.hash(p.case_id).text(p.title).hash(p.content_hash).hash(p.manifest_hash)
        .u64(p.size_bytes);
  }
  void operator()(const tx::GrantAccess& p) const {
    enc.hash(p.doc_id);
    encode_uid(enc, p.grantee);
  }
  void operator()(const tx::RevokeAccess& p) const {
    enc.hash(p.doc_id);
    encode_uid(enc, p.grantee);
  }
  void operator()(const tx::TransferCustody& p) const {
    enc.hash(p.doc_id);
    encode_uid(enc, p.to);
    enc.text(p.note);
  }
  void operator()(const tx::SignDocument& p) const {
    enc.hash(p.doc_id).raw(p.content_signature.bytes);
  }
  void operator()(const tx::UpdateCaseStatus& p) const {
    enc.hash(p.case_id).u64(static_cast<std::uint64_t>(p.status)).text(p.note);
  }
};

CaseStatus decode_status(Decoder& dec) {
  std::uint64_t v = dec.u64();
  if (v > static_cast<std::uint64_t>(CaseStatus::Closed)) {
    throw Error(ErrorCode::DecodeError, "case status tag out of range");
  }
  return static_cast<CaseStatus>(v);
}

TxPayload decode_payload(std::uint64_t kind, Decoder& dec) {
  switch (kind) {
    case 0: {
      tx::RegisterIdentity p;
      p.details = IdentityDetails::decode(dec);
      p.public_key.bytes = dec.raw<32>();
      return p;
    }
    case 1: {
      tx::FileCase p;
      p.case_type = dec.text();
      p.petitioner = decode_uid(dec);
      p.defendant = decode_uid(dec);
      std::size_t n = dec.count();
      p.lawyers.reserve(n);
      for (std::size_t i = 0; i < n; ++i) p.lawyers.push_back(decode_uid(dec));
      return p;
    }
    case 2: {
      tx::ScheduleHearing p;
      p.case_id = dec.hash();
      p.hearing_at = dec.i64();
      return p;
    }
    case 3: {
      tx::UploadDocument p;
      p.case_id = dec.hash();
      p.title = dec.text();
      p.content_hash = dec.hash();
      p.manifest_hash = dec.hash();
      p.size_bytes = dec.u64();
      return p;
    }
    case 4: {
      tx::GrantAccess p;
      p.doc_id = dec.hash();
      p.grantee = decode_uid(dec);
      return p;
    }
    case 5: {
      tx::RevokeAccess p;
      p.doc_id = dec.hash();
      p.grantee = decode_uid(dec);
      return p;
    }
    case 6: {
      tx::TransferCustody p;
      p.doc_id = dec.hash();
      p.to = decode_uid(dec);
      p.note = dec.text();
      return p;
    }
    case 7: {
      tx::SignDocument p;
      p.doc_id = dec.hash();
      p.content_signature.bytes = dec.raw<64>();
      return p;
    }
    case 8: {
      tx::UpdateCaseStatus p;
      p.case_id = dec.hash();
      p.status = decode_status(dec);
      p.note = dec.text();
      return p;
    }
    default:
      throw Error(ErrorCode::DecodeError,
                  "unknown transaction kind " + std::to_string(kind));
  }
}

void encode_unsigned(const Transaction& t, Encoder& enc) {
  enc.u64(t.payload.index());
  std::visit(PayloadEncoder{enc}, t.payload);
  encode_uid(enc, t.sender);
  enc.u64(t.nonce).i64(t.submitted_at);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::string_view status_name(CaseStatus status) {
  switch (status) {
    case CaseStatus::Filed:
      return "Filed";
    case CaseStatus::InHearing:
      return "InHearing";
    case CaseStatus::Decided:
      return "Decided";
    case CaseStatus::Closed:
      return "Closed";
  }
  return "Unknown";
}

std::optional<CaseStatus> parse_status(std::string_view name) {
  std::string l = lower(name);
  if (l == "filed") return CaseStatus::Filed;
  if (l == "inhearing" || l == "in-hearing" || l == "in_hearing") {
    return CaseStatus::InHearing;
  }
  if (l == "decided") return CaseStatus::Decided;
  if (l == "closed") return CaseStatus::Closed;
  return std::nullopt;
}

std::string_view kind_name(const TxPayload& payload) {
  static constexpr std::string_view kNames[] = {
      "RegisterIdentity", "FileCase",        "ScheduleHearing",
      "UploadDocument",   "GrantAccess",     "RevokeAccess",
      "TransferCustody",  "SignDocument",    "UpdateCaseStatus"};
  return kNames[payload.index()];
}

Bytes Transaction::signing_bytes() const {
  Encoder enc;
  encode_unsigned(*this, enc);
  return enc.take();
}

void Transaction::encode(Encoder& enc) const {
  encode_unsigned(*this, enc);
  enc.raw(signature.bytes);
}

Bytes Transaction::encode() const {
  Encoder enc;
  encode(enc);
  return enc.take();
}

Hash256 Transaction::hash() const { return keccak256(encode()); }

Transaction Transaction::decode(Decoder& dec) {
  Transaction t;
  std::uint64_t kind = dec.u64();
  t.payload = decode_payload(kind, dec);
  t.sender = decode_uid(dec);
  t.nonce = dec.u64();
  t.submitted_at = dec.i64();
  t.signature.bytes = dec.raw<64>();
  return t;
}

Transaction Transaction::decode(ByteView data) {
  Decoder dec(data);
  Transaction t = decode(dec);
  dec.finish();
  return t;
}

Transaction make_transaction(TxPayload payload, const Uid& sender,
                             std::uint64_t nonce, std::int64_t submitted_at,
                             const SigningKey& key) {
  Transaction t;
  t.payload = std::move(payload);
  t.sender = sender;
  t.nonce = nonce;
  t.submitted_at = submitted_at;
  t.signature = key.sign(t.signing_bytes());
  return t;
}

}  // namespace evault
