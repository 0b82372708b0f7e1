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

#ifndef EVAULT_TESTS_TRAFFIC_HPP_
#define EVAULT_TESTS_TRAFFIC_HPP_

#include <random>
#include <vector>

#include "fixture.hpp"

namespace evault::testing {

/// Random mixed traffic over a registered population: plausible-but-often
/// wrong senders, stale or skipped nonces, forged signatures and unknown
/// resources alongside well-formed workflow steps.
class TrafficGenerator {
 public:
  TrafficGenerator(LedgerFixture& fixture, std::uint64_t seed, int judges = 2, int lawyers = 4,
                   int citizens = 5);

  /// A transaction aimed at `state`; roughly half are valid.
  Transaction next(const WorldState& state);

  const std::vector<Actor*>& everyone() const { return everyone_; }

 private:
  Actor& pick(const std::vector<Actor*>& from);
  Actor& actor_for(const Uid& uid);
  template <typename Map>
  const typename Map::mapped_type* pick_entry(const Map& m);
  std::uint64_t nonce_for(const WorldState& state, const Actor& a);

  LedgerFixture& f_;
  std::mt19937_64 rng_;
  std::vector<Actor*> judges_, lawyers_, citizens_, everyone_;
  std::vector<Transaction> history_;
  int fresh_ = 0;
};

/// Checks that hold for every reachable state; returns a description of the
/// first violation or an empty string.
std::string check_state_invariants(const WorldState& state);

}  // namespace evault::testing

#endif  // EVAULT_TESTS_TRAFFIC_HPP_
