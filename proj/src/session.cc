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

#include "rfidpriv/session.h"

#include <cmath>
#include <utility>

#include "rfidpriv/machines.h"

namespace rfidpriv {

Rng ReaderStream(const Rng& session) { return session.Fork(1); }
Rng ChannelStream(const Rng& session) { return session.Fork(2); }
Rng TagStream(const Rng& session, std::size_t tag_index) {
  return session.Fork(1000 + tag_index);
}

SessionResult RunProtocol(const ProtocolId& id, ReaderState reader_state,
                          std::vector<TagState> tag_states,
                          std::optional<BitString> target_tid,
                          const ChannelOptions& channel, const Rng& rng) {
  const bool search = IsSearch(id.family);
  if (!search && tag_states.size() != 1) {
    throw std::invalid_argument(ToString(id) +
                                " runs against exactly one responding tag");
  }
  if (channel.target_slot &&
      (*channel.target_slot < 0.0 || *channel.target_slot >= 1.0)) {
    throw std::invalid_argument("target slot must lie in [0, 1)");
  }

  SessionResult result;
  result.transcript.protocol = id;
  result.transcript.session_id = channel.session_id;
  MeterScope meter(result.counts);

  ReaderMachine reader(id, std::move(reader_state), target_tid,
                       ReaderStream(rng));
  std::vector<TagMachine> tags;
  tags.reserve(tag_states.size());
  for (std::size_t i = 0; i < tag_states.size(); ++i) {
    Role role = Role::kTag;
    if (search && !tag_states[i].tid.SameAs(*target_tid)) {
      role = Role::kNonTargetTag;
    }
    tags.emplace_back(id, std::move(tag_states[i]), role,
                      search ? channel.noise_rate : 0.0, TagStream(rng, i));
  }
  Rng channel_rng = ChannelStream(rng);

  auto& messages = result.transcript.messages;
  std::optional<Message> out = reader.Step(std::nullopt);
  while (out) {
    messages.push_back(*out);
    std::vector<Message> replies;
    std::optional<std::size_t> target_reply;
    for (TagMachine& tag : tags) {
      if (!tag.AwaitsStep(out->step)) continue;
      std::optional<Message> reply = tag.Step(*out);
      if (!reply) continue;
      if (tag.targeted() || !search) target_reply = replies.size();
      replies.push_back(std::move(*reply));
    }
    if (replies.empty()) break;

    Message incoming{replies.front().step, Direction::kTagToReader, {}};
    if (replies.size() == 1) {
      incoming = std::move(replies.front());
    } else {
      // Arrival order on the air: shuffle everything, then move the target's
      // reply to the requested slot if one was given.
      std::vector<std::size_t> order(replies.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      channel_rng.Shuffle(order);
      if (channel.target_slot && target_reply) {
        std::erase(order, *target_reply);
        const auto slot = static_cast<std::size_t>(
            std::floor(*channel.target_slot * static_cast<double>(replies.size())));
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(slot),
                     *target_reply);
      }
      for (std::size_t i : order) {
        for (Field& f : replies[i].fields) incoming.fields.push_back(std::move(f));
      }
    }
    messages.push_back(incoming);
    out = reader.Step(incoming);
  }
  reader.Abort("no tag answered");

  Outcome& outcome = result.transcript.outcome;
  outcome.accepted = reader.accepted();
  outcome.rejection = reader.rejection();
  if (outcome.accepted) outcome.matched_tid = reader.matched_tid();

  const TagMachine* responder = nullptr;
  for (const TagMachine& tag : tags) {
    if (!search || tag.targeted()) responder = &tag;
  }
  if (responder != nullptr) {
    if (id.variant == Variant::kEnhanced) {
      outcome.rid_recovered_by_tag = responder->state().recovered_rid;
    }
    outcome.mutual = IsMutual(id.family) && responder->reader_verified();
  }
  return result;
}

}  // namespace rfidpriv
