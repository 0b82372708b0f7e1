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

#ifndef EVAULT_ERROR_HPP_
#define EVAULT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace evault {

/// Machine-readable failure codes. The names double as the `code` field of
/// the HTTP error envelope, so renaming one is a wire-format change.
enum class ErrorCode {
  // hashchain
  EmptyLeafSet,
  IndexOutOfRange,
  EmptyTransactionList,
  ClockRegression,
  NotGenesis,
  DecodeError,
  BadHex,
  // identity
  EmptyField,
  BadSeedLength,
  InsecureKeyFile,
  // contracts
  UnknownActor,
  UnknownResource,
  WrongRole,
  BadSignature,
  BadNonce,
  PermissionDenied,
  UnknownCase,
  UnknownDocument,
  DuplicateIdentity,
  IllegalStatusTransition,
  CustodyMismatch,
  InvalidTransaction,
  // filestore
  BadChunkSize,
  EmptyObject,
  StoreWriteFailure,
  MissingChunk,
  IntegrityFailure,
  // consensus
  EmptyAuthoritySet,
  InvalidChain,
  BadSchedule,
  ZeroTicks,
  BadScenario,
  // vaultd
  UnknownUID,
  BadChallengeSignature,
  ExpiredChallenge,
  Unauthorized,
  MempoolFull,
  CorruptLog,
  ManifestUnavailable,
  BadRequest,
  NotFound,
  IoError,
  ShuttingDown,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace evault

#endif  // EVAULT_ERROR_HPP_
