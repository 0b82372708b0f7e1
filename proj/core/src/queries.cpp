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

#include <algorithm>
#include <cctype>

#include "evault/contracts.hpp"

namespace evault {
namespace {

const Identity& require_role(const WorldState& s, const Uid& uid, Role role) {
  const Identity* id = s.find_identity(uid);
  if (id == nullptr) {
    throw Error(ErrorCode::UnknownActor, "uid " + uid.hex() + " is not registered");
  }
  if (id->role != role) {
    throw Error(ErrorCode::WrongRole, "uid " + uid.hex() + " is a " +
                                          std::string(role_name(id->role)) +
                                          ", not a " + std::string(role_name(role)));
  }
  return *id;
}

// Scheduled hearings ascending, unscheduled last, then case number.
bool docket_before(const Case& a, const Case& b) {
  if (a.next_hearing_at.has_value() != b.next_hearing_at.has_value()) {
    return a.next_hearing_at.has_value();
  }
  if (a.next_hearing_at && *a.next_hearing_at != *b.next_hearing_at) {
    return *a.next_hearing_at < *b.next_hearing_at;
  }
  return a.case_number < b.case_number;
}

bool by_number(const Case& a, const Case& b) { return a.case_number < b.case_number; }

template <typename Pred>
std::vector<Case> collect(const WorldState& s, Pred pred) {
  std::vector<Case> out;
  for (const auto& [id, c] : s.cases) {
    if (pred(c)) out.push_back(c);
  }
  return out;
}

std::string fold_case(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::vector<Case> pending_cases_for_judge(const WorldState& state, const Uid& judge) {
  require_role(state, judge, Role::Judge);
  auto out = collect(state, [&](const Case& c) {
    return c.judge == judge && c.status != CaseStatus::Closed;
  });
  std::sort(out.begin(), out.end(), docket_before);
  return out;
}

std::vector<Case> upcoming_cases_for_lawyer(const WorldState& state,
                                            const Uid& lawyer) {
  require_role(state, lawyer, Role::Lawyer);
  auto out = collect(state, [&](const Case& c) {
    return c.lawyers.count(lawyer) > 0 && c.status != CaseStatus::Closed;
  });
  std::sort(out.begin(), out.end(), docket_before);
  return out;
}

std::vector<Case> cases_for_citizen(const WorldState& state, const Uid& citizen) {
  if (state.find_identity(citizen) == nullptr) {
    throw Error(ErrorCode::UnknownActor, "uid " + citizen.hex() + " is not registered");
  }
  auto out = collect(state, [&](const Case& c) {
    return c.petitioner == citizen || c.defendant == citizen;
  });
  std::sort(out.begin(), out.end(), by_number);
  return out;
}

std::vector<Case> search_cases(const WorldState& state, std::string_view query) {
  if (query.empty()) return {};
  const std::string needle = fold_case(query);
  auto contains = [&](std::string_view hay) {
    return hay.find(needle) != std::string_view::npos;
  };
  auto out = collect(state, [&](const Case& c) {
    return contains(fold_case(c.case_type)) ||
           contains(std::to_string(c.case_number)) ||
           contains(c.petitioner.hex()) || contains(c.defendant.hex());
  });
  std::sort(out.begin(), out.end(), by_number);
  return out;
}

}  // namespace evault
