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

#include "evault/authority.hpp"

#include <stdexcept>
#include <string>

#include "evault/error.hpp"

namespace evault {

AuthoritySet::AuthoritySet(std::vector<Authority> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::EmptyAuthoritySet, "authority set is empty");
  }
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].node_id != i) {
      throw std::invalid_argument("authority node ids must be dense from 0; "
                                  "entry " + std::to_string(i) + " has id " +
                                  std::to_string(members_[i].node_id));
    }
  }
}

const Authority& AuthoritySet::proposer_for(std::uint64_t height) const {
  if (height == 0) {
    throw std::out_of_range("genesis has no proposer in the schedule");
  }
  return members_[(height - 1) % members_.size()];
}

std::uint32_t expected_proposer(std::uint64_t height,
                                const AuthoritySet& authorities) {
  return authorities.proposer_for(height).node_id;
}

}  // namespace evault
