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

#ifndef RFIDPRIV_MACHINES_H_
#define RFIDPRIV_MACHINES_H_

#include <optional>
#include <string>

#include "rfidpriv/meter.h"
#include "rfidpriv/protocol.h"
#include "rfidpriv/rng.h"

namespace rfidpriv {

// Reader side of one session. Drive it with Step(): the first call takes no
// message and returns step 1; each later call consumes the tag's message and
// returns the reader's next one, or nullopt once the session has ended.
//
// Every primitive the reader runs inside Step() is metered as Role::kReader.
class ReaderMachine {
 public:
  // `target_tid` is required for search families and ignored otherwise.
  ReaderMachine(ProtocolId id, ReaderState state,
                std::optional<BitString> target_tid, Rng rng);

  // Throws StateError when called out of turn and ProtocolError on a
  // malformed message. Rejections end the session without throwing.
  std::optional<Message> Step(const std::optional<Message>& incoming);

  // Ends a session that stalled (no tag answered) as a rejection.
  void Abort(std::string reason);

  const ProtocolId& id() const { return id_; }
  bool done() const { return done_; }
  bool accepted() const { return accepted_; }
  const std::string& rejection() const { return rejection_; }
  std::optional<BitString> matched_tid() const;
  // Step index of the next message this reader expects, or 0.
  int awaiting() const { return done_ ? 0 : awaiting_; }
  const ReaderState& state() const { return state_; }

 private:
  std::optional<Message> Start();
  std::optional<Message> OnTagMessage(const Message& msg);
  std::optional<Message> OnSearchReplies(const Message& msg);
  std::optional<Message> Reject(std::string reason);
  std::optional<Message> Accept(std::optional<Message> last);
  const AccessListEntry& matched_entry() const;

  ProtocolId id_;
  ReaderState state_;
  std::optional<BitString> target_tid_;
  Rng rng_;
  bool started_ = false;
  bool done_ = false;
  bool accepted_ = false;
  int awaiting_ = 0;
  std::string rejection_;
};

// Tag side of one session. Non-target tags in a search session reply with a
// decoy of random bits with probability `noise_rate` and otherwise stay
// silent.
//
// `role` is what the meter charges this tag's work to: Role::kTag for the
// responding or searched-for tag, Role::kNonTargetTag for everyone else.
class TagMachine {
 public:
  TagMachine(ProtocolId id, TagState state, Role role, double noise_rate,
             Rng rng);

  std::optional<Message> Step(const Message& incoming);

  bool AwaitsStep(int step) const { return !done_ && awaiting_ == step; }
  bool done() const { return done_; }
  // The tag recognised itself as the addressee of a search broadcast.
  bool targeted() const { return targeted_; }
  // Lee family only: the reader's final digest checked out.
  bool reader_verified() const { return reader_verified_; }
  const TagState& state() const { return state_; }

 private:
  std::optional<Message> OnAuth(const Message& msg);
  std::optional<Message> OnSearch(const Message& msg);
  std::optional<Message> VerifyReader(const Message& msg);
  std::optional<Message> Finish(std::optional<Message> out);

  ProtocolId id_;
  TagState state_;
  Role role_;
  double noise_rate_;
  Rng rng_;
  bool done_ = false;
  bool targeted_ = false;
  bool reader_verified_ = false;
  int awaiting_ = 1;
};

}  // namespace rfidpriv

#endif  // RFIDPRIV_MACHINES_H_
