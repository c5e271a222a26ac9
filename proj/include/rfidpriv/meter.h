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

#ifndef RFIDPRIV_METER_H_
#define RFIDPRIV_METER_H_

#include <cstdint>

namespace rfidpriv {

// Who is executing when a primitive runs. The protocol machines set this
// around each of their steps; anything outside a role scope is unattributed.
enum class Role { kNone, kReader, kTag, kNonTargetTag };

struct RoleCounts {
  std::uint64_t reader = 0;
  std::uint64_t tag = 0;
  std::uint64_t non_target_tag = 0;
  std::uint64_t unattributed = 0;

  std::uint64_t total() const {
    return reader + tag + non_target_tag + unattributed;
  }
  void Add(Role role);
  RoleCounts& operator+=(const RoleCounts& other);
};

struct OperationCounts {
  RoleCounts hashes;
  RoleCounts nonces;
};

// Installs `counts` as the sink for hash and nonce events on this thread for
// the lifetime of the scope. Scopes nest; the innermost wins. Counters are
// thread-local, so parallel sessions never share a sink.
class MeterScope {
 public:
  explicit MeterScope(OperationCounts& counts);
  ~MeterScope();
  MeterScope(const MeterScope&) = delete;
  MeterScope& operator=(const MeterScope&) = delete;

 private:
  OperationCounts* previous_;
};

class RoleScope {
 public:
  explicit RoleScope(Role role);
  ~RoleScope();
  RoleScope(const RoleScope&) = delete;
  RoleScope& operator=(const RoleScope&) = delete;

 private:
  Role previous_;
};

Role CurrentRole();

namespace meter {
void RecordHash();
void RecordNonce();
}  // namespace meter

}  // namespace rfidpriv

#endif  // RFIDPRIV_METER_H_
