//
// Copyright 2026 The rfidpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "rfidpriv/meter.h"

namespace rfidpriv {
namespace {

thread_local OperationCounts* g_sink = nullptr;
thread_local Role g_role = Role::kNone;

}  // namespace

void RoleCounts::Add(Role role) {
  switch (role) {
    case Role::kReader:
      ++reader;
      break;
    case Role::kTag:
      ++tag;
      break;
    case Role::kNonTargetTag:
      ++non_target_tag;
      break;
    case Role::kNone:
      ++unattributed;
      break;
  }
}

RoleCounts& RoleCounts::operator+=(const RoleCounts& other) {
  reader += other.reader;
  tag += other.tag;
  non_target_tag += other.non_target_tag;
  unattributed += other.unattributed;
  return *this;
}

MeterScope::MeterScope(OperationCounts& counts) : previous_(g_sink) {
  g_sink = &counts;
}

MeterScope::~MeterScope() { g_sink = previous_; }

RoleScope::RoleScope(Role role) : previous_(g_role) { g_role = role; }

RoleScope::~RoleScope() { g_role = previous_; }

Role CurrentRole() { return g_role; }

namespace meter {

void RecordHash() {
  if (g_sink != nullptr) g_sink->hashes.Add(g_role);
}

void RecordNonce() {
  if (g_sink != nullptr) g_sink->nonces.Add(g_role);
}

}  // namespace meter
}  // namespace rfidpriv
