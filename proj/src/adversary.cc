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

#include "rfidpriv/adversary.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "rfidpriv/fleet.h"
#include "rfidpriv/machines.h"

namespace rfidpriv {
namespace {

struct Fixture {
  ReaderState reader;
  std::vector<TagState> tags;
  std::optional<BitString> target;
};

Fixture MakeFixture(const ProtocolId& id, const BitString& rid, Rng& rng,
                    const SessionParams& params, std::size_t search_population) {
  const std::size_t n = IsSearch(id.family) ? search_population : 1;
  if (n == 0) throw std::invalid_argument("search needs at least one tag");
  std::set<BitString> seen;
  std::vector<TagRecord> records;
  while (records.size() < n) {
    BitString tid = rng.Bits(params.bits);
    if (!seen.insert(tid).second) continue;
    records.push_back({std::move(tid), rng.Bits(params.bits)});
  }
  std::vector<BitString> tids;
  for (const TagRecord& r : records) tids.push_back(r.tid);
  const ServerDirectory dir(records, {rid}, {{rid, tids}});

  Fixture f;
  f.reader = {.rid = rid,
              .access_list = DeriveAccessList(dir, rid, SchemeFor(id.family)),
              .params = params};
  for (const TagRecord& r : records) {
    f.tags.push_back({.tid = r.tid, .kt = r.kt, .params = params});
  }
  if (IsSearch(id.family)) f.target = records.front().tid;
  return f;
}

// Values an eavesdropper can try to match across sessions.
std::vector<BitString> LinkableValues(const Transcript& t) {
  std::vector<BitString> out;
  for (const Message& m : t.messages) {
    for (const Field& f : m.fields) {
      if (!IsNonceField(f.name)) out.push_back(f.value);
    }
  }
  return out;
}

bool FieldsRepeat(const Transcript& a, const Transcript& b) {
  const std::vector<BitString> va = LinkableValues(a);
  const std::set<BitString> sa(va.begin(), va.end());
  for (const BitString& v : LinkableValues(b)) {
    if (sa.count(v) != 0) return true;
  }
  return false;
}

BitString RandomRid(Rng& rng, const SessionParams& params) {
  return rng.Bits(params.bits);
}

}  // namespace

std::string_view AttackName(Attack attack) {
  switch (attack) {
    case Attack::kPlaintextRid:
      return "plaintext-rid";
    case Attack::kLinkability:
      return "linkability";
    case Attack::kReplay:
      return "replay";
  }
  return "?";
}

Attack ParseAttack(std::string_view name) {
  for (Attack a : {Attack::kPlaintextRid, Attack::kLinkability, Attack::kReplay}) {
    if (AttackName(a) == name) return a;
  }
  throw std::invalid_argument("unknown attack '" + std::string(name) + "'");
}

SessionResult RunFreshSession(const ProtocolId& id, const BitString& rid,
                              const Rng& rng, const SessionParams& params,
                              std::size_t search_population) {
  Rng fleet_rng = rng.Fork(0);
  Fixture f = MakeFixture(id, rid, fleet_rng, params, search_population);
  return RunProtocol(id, std::move(f.reader), std::move(f.tags), f.target, {},
                     rng.Fork(1));
}

AttackOutcome DetectPlaintextRid(const Transcript& t,
                                 std::span<const BitString> known_rids) {
  AttackOutcome out{.attack = Attack::kPlaintextRid};
  for (const Message& m : t.messages) {
    for (const Field& f : m.fields) {
      for (const BitString& rid : known_rids) {
        if (f.value.SameAs(rid)) {
          out.success = true;
          out.detail = "step " + std::to_string(m.step) + " field '" + f.name +
                       "' carries RID " + rid.ToHex();
          return out;
        }
      }
    }
  }
  out.detail = "no field equals a known RID";
  return out;
}

AttackOutcome LinkabilityGame(const ProtocolId& id, const BitString& rid_a,
                              const BitString& rid_b, std::size_t trials,
                              const Rng& rng, const SessionParams& params) {
  if (trials < 100) {
    throw std::invalid_argument("linkability game needs at least 100 trials");
  }
  if (rid_a.SameAs(rid_b)) {
    throw std::invalid_argument("linkability game needs two distinct readers");
  }
  std::vector<bool> same_reader(trials, false);
  for (std::size_t i = 0; i < trials / 2; ++i) same_reader[i] = true;
  Rng coin_rng = rng.Fork(0);
  coin_rng.Shuffle(same_reader);

  const Rng first_root = rng.Fork(1);
  const Rng second_root = rng.Fork(2);
  std::size_t correct = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const SessionResult first =
        RunFreshSession(id, rid_a, first_root.Fork(t), params);
    const SessionResult second = RunFreshSession(
        id, same_reader[t] ? rid_a : rid_b, second_root.Fork(t), params);
    const bool guess_same = FieldsRepeat(first.transcript, second.transcript);
    if (guess_same == same_reader[t]) ++correct;
  }
  const double p = static_cast<double>(correct) / static_cast<double>(trials);
  AttackOutcome out{.attack = Attack::kLinkability};
  out.advantage = std::abs(2.0 * p - 1.0);
  out.success = *out.advantage >= 0.5;
  out.detail = std::to_string(correct) + "/" + std::to_string(trials) +
               " trials linked correctly";
  return out;
}

AttackOutcome ReplayAttack(const ProtocolId& id, int which_message,
                           const Rng& rng, bool same_session,
                           const SessionParams& params) {
  if (id.variant != Variant::kEnhanced) {
    throw std::invalid_argument("replay attacks target enhanced variants");
  }
  if (which_message < 1 || which_message > StepCount(id)) {
    throw std::out_of_range("message " + std::to_string(which_message) +
                            " is outside 1.." + std::to_string(StepCount(id)));
  }
  Rng setup = rng.Fork(0);
  const BitString rid = RandomRid(setup, params);
  const Fixture f = MakeFixture(id, rid, setup, params, 4);
  const Rng recorded_rng = rng.Fork(1);
  const SessionResult recorded =
      RunProtocol(id, f.reader, f.tags, f.target, {}, recorded_rng);
  const std::vector<Message>& old = recorded.transcript.messages;
  if (static_cast<int>(old.size()) < which_message) {
    throw std::logic_error("recorded session ended before message " +
                           std::to_string(which_message));
  }
  const Rng victim_rng = same_session ? recorded_rng : rng.Fork(2);

  AttackOutcome out{.attack = Attack::kReplay};
  const std::string where =
      "replayed step " + std::to_string(which_message) +
      (same_session ? " into its own session" : " into a fresh session");

  if (StepDirection(id, which_message) == Direction::kTagToReader) {
    ReaderMachine reader(id, f.reader, f.target, ReaderStream(victim_rng));
    bool emitted_cipher = false;
    std::optional<Message> msg = reader.Step(std::nullopt);
    while (msg && !reader.done()) {
      const auto next = static_cast<std::size_t>(msg->step);
      if (next >= old.size() || old[next].direction != Direction::kTagToReader) {
        break;
      }
      try {
        msg = reader.Step(old[next]);
      } catch (const ProtocolError&) {
        break;
      }
      if (msg && msg->step > 1 && msg->Has(field::kCipher)) emitted_cipher = true;
    }
    out.success = reader.accepted() || emitted_cipher;
    out.detail = where + ": reader " +
                 (out.success ? "accepted" : "rejected (" + reader.rejection() + ")");
    return out;
  }

  TagMachine tag(id, f.tags.front(), Role::kTag, 0.0, TagStream(victim_rng, 0));
  for (const Message& m : old) {
    if (m.direction == Direction::kTagToReader) continue;
    if (!tag.AwaitsStep(m.step)) break;
    try {
      tag.Step(m);
    } catch (const ProtocolError&) {
      break;
    }
  }
  const auto& recovered = tag.state().recovered_rid;
  const bool rid_ok = recovered && recovered->SameAs(rid);
  out.success = IsMutual(id.family) && tag.reader_verified();
  out.detail = where + ": tag " +
               (IsMutual(id.family)
                    ? (out.success ? "accepted the reader" : "rejected the reader")
                    : std::string("makes no acceptance decision")) +
               ", recovered RID " + (rid_ok ? "matches" : "does not match");
  return out;
}

AttackReport RunAttack(Attack attack, const ProtocolId& id, std::size_t trials,
                       std::uint64_t seed, const SessionParams& params) {
  if (trials == 0) throw std::invalid_argument("attack needs at least one trial");
  const Rng root(seed);
  AttackReport report{.attack = attack, .protocol = id, .trials = trials,
                      .seed = seed};
  Rng rid_rng = root.Fork(0);
  const BitString rid_a = RandomRid(rid_rng, params);
  BitString rid_b = RandomRid(rid_rng, params);
  while (rid_b.SameAs(rid_a)) rid_b = RandomRid(rid_rng, params);

  switch (attack) {
    case Attack::kPlaintextRid: {
      std::size_t hits = 0;
      const Rng sessions = root.Fork(1);
      for (std::size_t t = 0; t < trials; ++t) {
        const SessionResult s = RunFreshSession(id, rid_a, sessions.Fork(t), params);
        if (DetectPlaintextRid(s.transcript, std::span(&rid_a, 1)).success) ++hits;
      }
      report.success_rate = static_cast<double>(hits) / static_cast<double>(trials);
      break;
    }
    case Attack::kLinkability: {
      const AttackOutcome o =
          LinkabilityGame(id, rid_a, rid_b, trials, root.Fork(1), params);
      report.advantage = o.advantage;
      report.success_rate = (1.0 + *o.advantage) / 2.0;
      break;
    }
    case Attack::kReplay: {
      std::size_t hits = 0;
      std::size_t attempts = 0;
      const Rng sessions = root.Fork(1);
      for (std::size_t t = 0; t < trials; ++t) {
        for (int step = 1; step <= StepCount(id); ++step) {
          ++attempts;
          if (ReplayAttack(id, step, sessions.Fork(t), false, params).success) ++hits;
        }
      }
      report.success_rate = static_cast<double>(hits) / static_cast<double>(attempts);
      break;
    }
  }
  return report;
}

nlohmann::ordered_json AttackReportToJson(const AttackReport& report) {
  nlohmann::ordered_json j;
  j["attack"] = AttackName(report.attack);
  j["protocol"] = {{"family", FamilyName(report.protocol.family)},
                   {"variant", VariantName(report.protocol.variant)}};
  j["trials"] = report.trials;
  j["success_rate"] = report.success_rate;
  if (report.advantage) j["advantage"] = *report.advantage;
  j["seed"] = report.seed;
  return j;
}

}  // namespace rfidpriv
