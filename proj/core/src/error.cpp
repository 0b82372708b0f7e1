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

#include "evault/error.hpp"

namespace evault {

std::string_view error_name(ErrorCode code) {
  switch (code) {
#define EVAULT_ERROR_CASE(name) \
  case ErrorCode::name:         \
    return #name;
    EVAULT_ERROR_CASE(EmptyLeafSet)
    EVAULT_ERROR_CASE(IndexOutOfRange)
    EVAULT_ERROR_CASE(EmptyTransactionList)
    EVAULT_ERROR_CASE(ClockRegression)
    EVAULT_ERROR_CASE(NotGenesis)
    EVAULT_ERROR_CASE(DecodeError)
    EVAULT_ERROR_CASE(BadHex)
    EVAULT_ERROR_CASE(EmptyField)
    EVAULT_ERROR_CASE(BadSeedLength)
    EVAULT_ERROR_CASE(InsecureKeyFile)
    EVAULT_ERROR_CASE(UnknownActor)
    EVAULT_ERROR_CASE(UnknownResource)
    EVAULT_ERROR_CASE(WrongRole)
    EVAULT_ERROR_CASE(BadSignature)
    EVAULT_ERROR_CASE(BadNonce)
    EVAULT_ERROR_CASE(PermissionDenied)
    EVAULT_ERROR_CASE(UnknownCase)
    EVAULT_ERROR_CASE(UnknownDocument)
    EVAULT_ERROR_CASE(DuplicateIdentity)
    EVAULT_ERROR_CASE(IllegalStatusTransition)
    EVAULT_ERROR_CASE(CustodyMismatch)
    EVAULT_ERROR_CASE(InvalidTransaction)
    EVAULT_ERROR_CASE(BadChunkSize)
    EVAULT_ERROR_CASE(EmptyObject)
    EVAULT_ERROR_CASE(StoreWriteFailure)
    EVAULT_ERROR_CASE(MissingChunk)
    EVAULT_ERROR_CASE(IntegrityFailure)
    EVAULT_ERROR_CASE(EmptyAuthoritySet)
    EVAULT_ERROR_CASE(InvalidChain)
    EVAULT_ERROR_CASE(BadSchedule)
    EVAULT_ERROR_CASE(ZeroTicks)
    EVAULT_ERROR_CASE(BadScenario)
    EVAULT_ERROR_CASE(UnknownUID)
    EVAULT_ERROR_CASE(BadChallengeSignature)
    EVAULT_ERROR_CASE(ExpiredChallenge)
    EVAULT_ERROR_CASE(Unauthorized)
    EVAULT_ERROR_CASE(MempoolFull)
    EVAULT_ERROR_CASE(CorruptLog)
    EVAULT_ERROR_CASE(ManifestUnavailable)
    EVAULT_ERROR_CASE(BadRequest)
    EVAULT_ERROR_CASE(NotFound)
    EVAULT_ERROR_CASE(IoError)
    EVAULT_ERROR_CASE(ShuttingDown)
#undef EVAULT_ERROR_CASE
  }
  return "Unknown";
}

}  // namespace evault
