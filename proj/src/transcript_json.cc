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

#include "rfidpriv/transcript_json.h"

namespace rfidpriv {

nlohmann::ordered_json TranscriptToJson(const Transcript& t) {
  nlohmann::ordered_json j;
  j["protocol"] = {{"family", FamilyName(t.protocol.family)},
                   {"variant", VariantName(t.protocol.variant)}};
  j["session_id"] = t.session_id;
  j["messages"] = nlohmann::ordered_json::array();
  for (const Message& m : t.messages) {
    nlohmann::ordered_json jm;
    jm["step"] = m.step;
    jm["direction"] = DirectionName(m.direction);
    jm["fields"] = nlohmann::ordered_json::array();
    for (const Field& f : m.fields) {
      jm["fields"].push_back({{"name", f.name}, {"hex", f.value.ToHex()}});
    }
    j["messages"].push_back(std::move(jm));
  }
  nlohmann::ordered_json out;
  out["accepted"] = t.outcome.accepted;
  if (t.outcome.matched_tid) out["matched_tid"] = t.outcome.matched_tid->ToHex();
  if (t.outcome.rid_recovered_by_tag) {
    out["rid_recovered"] = t.outcome.rid_recovered_by_tag->ToHex();
  }
  out["mutual"] = t.outcome.mutual;
  j["outcome"] = std::move(out);
  return j;
}

Transcript TranscriptFromJson(const nlohmann::json& j) {
  Transcript t;
  const auto& p = j.at("protocol");
  t.protocol.family = ParseFamily(p.at("family").get<std::string>());
  t.protocol.variant = ParseVariant(p.at("variant").get<std::string>());
  t.session_id = j.at("session_id").get<std::uint64_t>();
  for (const auto& jm : j.at("messages")) {
    Message m;
    m.step = jm.at("step").get<int>();
    m.direction = ParseDirection(jm.at("direction").get<std::string>());
    for (const auto& f : jm.at("fields")) {
      m.fields.push_back({f.at("name").get<std::string>(),
                          BitString::FromHex(f.at("hex").get<std::string>())});
    }
    t.messages.push_back(std::move(m));
  }
  const auto& o = j.at("outcome");
  t.outcome.accepted = o.at("accepted").get<bool>();
  t.outcome.mutual = o.at("mutual").get<bool>();
  if (o.contains("matched_tid")) {
    t.outcome.matched_tid =
        BitString::FromHex(o.at("matched_tid").get<std::string>());
  }
  if (o.contains("rid_recovered")) {
    t.outcome.rid_recovered_by_tag =
        BitString::FromHex(o.at("rid_recovered").get<std::string>());
  }
  return t;
}

}  // namespace rfidpriv
