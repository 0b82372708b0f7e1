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

#ifndef EVAULT_WIRE_HPP_
#define EVAULT_WIRE_HPP_

// JSON representations shared by vaultd and vaultctl. Hashes, keys and
// signatures travel as lowercase hex; roles, statuses and kinds as names.

#include <string>
#include <string_view>

#include <json.hpp>

#include "evault/block.hpp"
#include "evault/consensus.hpp"
#include "evault/error.hpp"
#include "evault/filestore.hpp"
#include "evault/transaction.hpp"
#include "evault/world_state.hpp"

namespace evault::wire {

using nlohmann::json;

/// Every *_from_json function throws Error(BadRequest) on a missing field, a
/// wrong JSON type, bad hex or an unknown enum name.
json to_json(const Transaction& tx);
Transaction transaction_from_json(const json& j);

json to_json(const TxPayload& payload);
TxPayload payload_from_json(std::string_view kind, const json& j);

json to_json(const Identity& identity);
json to_json(const Case& c);
json to_json(const DocumentRecord& doc);
json to_json(const CustodyEvent& event);

json to_json(const BlockHeader& header);
json to_json(const Block& block);
Block block_from_json(const json& j);

/// Full manifest, chunk keys included.
json to_json(const ObjectManifest& manifest);
ObjectManifest manifest_from_json(const json& j);

json error_envelope(std::string_view code, std::string_view message);
json error_envelope(const Error& error);

Hash256 hash_field(const json& j, std::string_view name);
Uid uid_field(const json& j, std::string_view name);
std::string string_field(const json& j, std::string_view name);
std::uint64_t u64_field(const json& j, std::string_view name);
std::int64_t i64_field(const json& j, std::string_view name);

}  // namespace evault::wire

#endif  // EVAULT_WIRE_HPP_
