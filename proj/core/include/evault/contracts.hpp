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

#ifndef EVAULT_CONTRACTS_HPP_
#define EVAULT_CONTRACTS_HPP_

// The fixed transaction set and the deterministic state machine that folds
// it into a WorldState. Nothing here reads clocks, randomness, or files.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evault/block.hpp"
#include "evault/error.hpp"
#include "evault/world_state.hpp"

namespace evault {

enum class Action {
  RegisterIdentity,
  FileCase,
  ScheduleHearing,
  UpdateCaseStatus,
  UploadDocument,
  GrantAccess,
  RevokeAccess,
  TransferCustody,
  SignDocument,
  ReadDocument,
  ModifyDocument,  // nobody, ever
};

inline constexpr Action kAllActions[] = {
    Action::RegisterIdentity, Action::FileCase,       Action::ScheduleHearing,
    Action::UpdateCaseStatus, Action::UploadDocument, Action::GrantAccess,
    Action::RevokeAccess,     Action::TransferCustody, Action::SignDocument,
    Action::ReadDocument,     Action::ModifyDocument};

std::string_view action_name(Action action);

/// Case actions take a case id, document actions a doc id, registrar
/// actions ignore the resource. Throws Error(UnknownActor) for an
/// unregistered actor and Error(UnknownResource) for a missing resource.
bool check_permission(const WorldState& state, const Uid& actor, Action action,
                      const std::optional<Hash256>& resource = std::nullopt);

struct TxRejection {
  ErrorCode code;
  std::string message;
};

/// In-place form with the strong guarantee: on rejection the state is left
/// untouched. This is what block application uses.
std::optional<TxRejection> apply_transaction_in_place(WorldState& state,
                                                      const Transaction& tx,
                                                      std::uint64_t height);

struct ApplyResult {
  WorldState state;
  std::optional<TxRejection> rejection;

  bool ok() const { return !rejection.has_value(); }
};

ApplyResult apply_transaction(const WorldState& state, const Transaction& tx,
                              std::uint64_t height);

struct BlockRejection {
  std::uint64_t height = 0;
  std::size_t tx_index = 0;
  TxRejection rejection;
};

/// Applies every transaction of a block; all-or-nothing.
std::optional<BlockRejection> apply_block(WorldState& state, const Block& block);

struct ReplayResult {
  WorldState state;
  std::optional<BlockRejection> failure;  // state is as of the block before
};

ReplayResult replay_chain(std::span<const Block> blocks);

enum class DocumentVerdict { Match, Tampered, UnknownDocument };
std::string_view verdict_name(DocumentVerdict verdict);

DocumentVerdict verify_document(const WorldState& state, const Hash256& doc_id,
                                ByteView file_bytes);
DocumentVerdict verify_document_hash(const WorldState& state,
                                     const Hash256& doc_id,
                                     const Hash256& content_hash);

/// Throws Error(UnknownDocument).
const std::vector<CustodyEvent>& custody_history(const WorldState& state,
                                                 const Hash256& doc_id);

// Dockets. Non-closed cases sorted by next hearing, unscheduled last, ties
// by case number. Throw Error(UnknownActor) / Error(WrongRole).
std::vector<Case> pending_cases_for_judge(const WorldState& state,
                                          const Uid& judge);
std::vector<Case> upcoming_cases_for_lawyer(const WorldState& state,
                                            const Uid& lawyer);
/// Every case where the uid is petitioner or defendant, by case number.
std::vector<Case> cases_for_citizen(const WorldState& state, const Uid& citizen);
/// Case-insensitive substring search over case type, case number and party
/// uids. Empty query gives an empty result.
std::vector<Case> search_cases(const WorldState& state, std::string_view query);

}  // namespace evault

#endif  // EVAULT_CONTRACTS_HPP_
