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

#ifndef RFIDPRIV_TESTS_TEST_UTIL_H_
#define RFIDPRIV_TESTS_TEST_UTIL_H_

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rfidpriv/fleet.h"
#include "rfidpriv/protocol.h"
#include "rfidpriv/session.h"

namespace rfidpriv::testing {

struct Fleet {
  ServerDirectory dir;
  BitString rid;
};

inline Fleet MakeFleet(std::size_t n_tags, std::uint64_t seed,
                       std::size_t bits = kDefaultBits) {
  Rng rng(seed);
  ProvisionedSystem sys = ProvisionSystem(
      {.n_tags = n_tags, .n_readers = 2, .bits = bits}, rng);
  return {std::move(sys.directory), sys.rids.front()};
}

inline ReaderState MakeReader(const Fleet& fleet, const ProtocolId& id,
                              const SessionParams& params = {}) {
  return {.rid = fleet.rid,
          .access_list =
              DeriveAccessList(fleet.dir, fleet.rid, SchemeFor(id.family)),
          .params = params};
}

inline TagState MakeTag(const TagRecord& rec, const SessionParams& params = {}) {
  return {.tid = rec.tid, .kt = rec.kt, .params = params};
}

inline SessionResult RunAuth(const ProtocolId& id, const Fleet& fleet,
                             std::size_t tag, const Rng& rng) {
  return RunProtocol(id, MakeReader(fleet, id), {MakeTag(fleet.dir.tags()[tag])},
                     std::nullopt, {}, rng);
}

inline SessionResult RunSearch(const ProtocolId& id, const Fleet& fleet,
                               std::size_t target, double q, const Rng& rng) {
  std::vector<TagState> tags;
  for (const TagRecord& t : fleet.dir.tags()) tags.push_back(MakeTag(t));
  return RunProtocol(id, MakeReader(fleet, id), std::move(tags),
                     fleet.dir.tags()[target].tid, {.noise_rate = q}, rng);
}

inline SessionResult RunAny(const ProtocolId& id, const Fleet& fleet,
                            std::size_t tag, const Rng& rng) {
  return IsSearch(id.family) ? RunSearch(id, fleet, tag, 0.5, rng)
                             : RunAuth(id, fleet, tag, rng);
}

inline std::vector<ProtocolId> AllProtocols() {
  std::vector<ProtocolId> ids;
  for (Family f : kAllFamilies) {
    ids.push_back({f, Variant::kOriginal});
    ids.push_back({f, Variant::kEnhanced});
  }
  return ids;
}

inline nlohmann::json LoadGolden() {
  std::ifstream f(std::string(RFIDPRIV_TEST_DATA_DIR) + "/golden_vectors.json");
  return nlohmann::json::parse(f);
}

}  // namespace rfidpriv::testing

#endif  // RFIDPRIV_TESTS_TEST_UTIL_H_
