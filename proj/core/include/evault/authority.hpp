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

#ifndef EVAULT_AUTHORITY_HPP_
#define EVAULT_AUTHORITY_HPP_

#include <cstdint>
#include <vector>

#include "evault/identity.hpp"

namespace evault {

struct Authority {
  std::uint32_t node_id = 0;
  Uid proposer;
  VerifyKey key;

  friend bool operator==(const Authority&, const Authority&) = default;
};

/// Ordered proof-of-authority validator set. The order is consensus-critical:
/// block at height h must come from entry (h - 1) mod size.
class AuthoritySet {
 public:
  /// Throws Error(EmptyAuthoritySet) if empty, std::invalid_argument if the
  /// node ids are not exactly 0..n-1 in order.
  explicit AuthoritySet(std::vector<Authority> members);

  std::size_t size() const { return members_.size(); }
  const Authority& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Authority>& members() const { return members_; }

  /// Throws std::out_of_range for height 0.
  const Authority& proposer_for(std::uint64_t height) const;

 private:
  std::vector<Authority> members_;
};

/// Round-robin schedule: node id at index (height - 1) mod n.
std::uint32_t expected_proposer(std::uint64_t height,
                                const AuthoritySet& authorities);

}  // namespace evault

#endif  // EVAULT_AUTHORITY_HPP_
