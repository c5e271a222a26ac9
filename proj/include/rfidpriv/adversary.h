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

#ifndef RFIDPRIV_ADVERSARY_H_
#define RFIDPRIV_ADVERSARY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rfidpriv/protocol.h"
#include "rfidpriv/rng.h"
#include "rfidpriv/session.h"

namespace rfidpriv {

enum class Attack { kPlaintextRid, kLinkability, kReplay };

std::string_view AttackName(Attack attack);
Attack ParseAttack(std::string_view name);

struct AttackOutcome {
  Attack attack = Attack::kPlaintextRid;
  bool success = false;
  // Set for kLinkability only.
  std::optional<double> advantage;
  std::string detail;
};

// Honest session of `id` for reader `rid` against a freshly provisioned tag
// population: one tag for authentication, `search_population` tags for search
// (the first one is the target).
SessionResult RunFreshSession(const ProtocolId& id, const BitString& rid,
                              const Rng& rng, const SessionParams& params = {},
                              std::size_t search_population = 4);

// Succeeds iff some message field carries one of `known_rids` verbatim.
AttackOutcome DetectPlaintextRid(const Transcript& t,
                                 std::span<const BitString> known_rids);

// Passive linking game. Per trial a hidden coin decides whether the second
// of two fresh sessions is run by the same reader as the first (rid_a) or by
// rid_b; each session talks to newly provisioned tags. The adversary says
// "same reader" iff a non-nonce field value of one transcript reappears in
// the other. Half the trials use each reader pairing, in shuffled order.
//
// advantage = |2 P(correct) - 1|; success means advantage >= 0.5.
// Throws std::invalid_argument if trials < 100 or rid_a equals rid_b.
AttackOutcome LinkabilityGame(const ProtocolId& id, const BitString& rid_a,
                              const BitString& rid_b, std::size_t trials,
                              const Rng& rng, const SessionParams& params = {});

// Records an honest session, then impersonates the sender of message
// `which_message` (1-based) by replaying every message that party sent, in
// order, to an honest victim. With `same_session` the victim reuses the
// recorded session's randomness, which is the sanity control.
//
// The victim accepts when:
//   reader: it emits a ciphered RID or accepts the tag;
//   tag: its check of the reader's final digest passes. Tags in unilateral
//        protocols make no such check and therefore never accept.
//
// Throws std::invalid_argument for original variants and std::out_of_range
// for a step outside 1..StepCount(id).
AttackOutcome ReplayAttack(const ProtocolId& id, int which_message,
                           const Rng& rng, bool same_session = false,
                           const SessionParams& params = {});

struct AttackReport {
  Attack attack = Attack::kPlaintextRid;
  ProtocolId protocol;
  std::size_t trials = 0;
  double success_rate = 0.0;
  std::optional<double> advantage;
  std::uint64_t seed = 0;
};

// Repeats an attack `trials` times from `seed`:
//   plaintext-rid: fraction of honest sessions exposing the RID;
//   linkability:   one game of `trials` trials, success_rate = P(correct);
//   replay:        every message of each recorded session is replayed once,
//                  success_rate = accepted replays / replays.
AttackReport RunAttack(Attack attack, const ProtocolId& id, std::size_t trials,
                       std::uint64_t seed, const SessionParams& params = {});

// {attack, protocol: {family, variant}, trials, success_rate, advantage?, seed}
nlohmann::ordered_json AttackReportToJson(const AttackReport& report);

}  // namespace rfidpriv

#endif  // RFIDPRIV_ADVERSARY_H_
