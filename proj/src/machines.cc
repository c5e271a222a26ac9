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

#include "rfidpriv/machines.h"

#include <utility>

#include "rfidpriv/preprotocol.h"

namespace rfidpriv {
namespace {

// Tag proof of its certification: H(cert || Nr || Nt).
BitString CertResponse(const BitString& cert, const BitString& nr,
                       const BitString& nt) {
  return HashFields(HashLabel::kH, {cert, nr, nt}, cert.width());
}

// Reader proof back to a Lee tag: H(cert || Nt).
BitString ReaderConfirmation(const BitString& cert, const BitString& nt) {
  return HashFields(HashLabel::kH, {cert, nt}, cert.width());
}

Field MakeField(std::string_view name, BitString value) {
  return {std::string(name), std::move(value)};
}

const BitString& Sized(const Message& msg, std::string_view name,
                       std::size_t bits) {
  const BitString& v = msg.Get(name);
  if (v.width() != bits) {
    throw ProtocolError("field '" + std::string(name) + "' is " +
                        std::to_string(v.width()) + " bits, want " +
                        std::to_string(bits));
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Reader

ReaderMachine::ReaderMachine(ProtocolId id, ReaderState state,
                             std::optional<BitString> target_tid, Rng rng)
    : id_(id),
      state_(std::move(state)),
      target_tid_(std::move(target_tid)),
      rng_(std::move(rng)) {
  if (IsSearch(id_.family) && !target_tid_) {
    throw std::invalid_argument(ToString(id_) + " needs a target TID");
  }
}

std::optional<Message> ReaderMachine::Step(
    const std::optional<Message>& incoming) {
  RoleScope scope(Role::kReader);
  if (done_) throw StateError("reader session already finished");
  if (!started_) {
    if (incoming) throw StateError("reader speaks first");
    started_ = true;
    return Start();
  }
  if (!incoming) throw StateError("reader is waiting for a tag message");
  if (incoming->step != awaiting_) {
    throw StateError("reader expected step " + std::to_string(awaiting_) +
                     ", got step " + std::to_string(incoming->step));
  }
  if (incoming->direction != Direction::kTagToReader) {
    throw ProtocolError("reader received a reader-originated message");
  }
  if (IsSearch(id_.family)) return OnSearchReplies(*incoming);
  return OnTagMessage(*incoming);
}

std::optional<BitString> ReaderMachine::matched_tid() const {
  if (!state_.matched) return std::nullopt;
  return matched_entry().tid;
}

const AccessListEntry& ReaderMachine::matched_entry() const {
  return state_.access_list.entries.at(*state_.matched);
}

std::optional<Message> ReaderMachine::Start() {
  const std::size_t bits = state_.params.bits;
  awaiting_ = 2;
  if (IsSearch(id_.family)) {
    Message msg;
    if (id_.variant == Variant::kEnhanced) {
      try {
        msg = PresearchBroadcast(state_, *target_tid_, rng_);
      } catch (const NotAuthorizedError& e) {
        return Reject(e.what());
      }
    } else {
      const auto& entries = state_.access_list.entries;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].tid.SameAs(*target_tid_)) state_.matched = i;
      }
      if (!state_.matched) {
        return Reject("target " + target_tid_->ToHex() +
                      " is not in the reader's access list");
      }
      state_.nr = GenNonce(rng_, bits);
      msg = {1,
             Direction::kReaderBroadcast,
             {MakeField(field::kRid, state_.rid), MakeField(field::kNr, *state_.nr)}};
    }
    msg.fields.push_back(MakeField(
        field::kSelector, TruncateLeft(*target_tid_, state_.params.selector_bits)));
    return msg;
  }
  if (id_.variant == Variant::kEnhanced) return PreauthChallenge(state_, rng_);

  state_.nr = GenNonce(rng_, bits);
  Message msg{1, Direction::kReaderBroadcast, {MakeField(field::kNr, *state_.nr)}};
  if (id_.family == Family::kLeeAuth) {
    msg.fields.push_back(MakeField(field::kRid, state_.rid));
  }
  return msg;
}

std::optional<Message> ReaderMachine::OnTagMessage(const Message& msg) {
  const std::size_t bits = state_.params.bits;
  const bool enhanced = id_.variant == Variant::kEnhanced;
  const auto& entries = state_.access_list.entries;

  if (msg.step == 2 && enhanced) {
    Message out;
    try {
      out = PreauthDeliverRid(state_, msg);
    } catch (const NoMatchError& e) {
      return Reject(e.what());
    }
    awaiting_ = 4;
    return out;
  }

  if (id_.family == Family::kTanAuth) {
    if (msg.step == 2) {
      state_.nt = Sized(msg, field::kNt, bits);
      awaiting_ = 4;
      return Message{3, Direction::kReaderToTag, {MakeField(field::kRid, state_.rid)}};
    }
    const BitString& d = Sized(msg, field::kD, bits);
    if (enhanced) {
      // The tag was identified by the pre-protocol; its TID need not be
      // searched for again.
      return Accept(std::nullopt);
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (CertResponse(entries[i].cert, *state_.nr, *state_.nt) == d) {
        state_.matched = i;
        return Accept(std::nullopt);
      }
    }
    return Reject("no access-list entry matches the tag's response");
  }

  // Lee authentication.
  if (enhanced) {
    Sized(msg, field::kD1, bits);
    return Accept(Message{5,
                          Direction::kReaderToTag,
                          {MakeField(field::kD2, ReaderConfirmation(
                                                     matched_entry().cert,
                                                     *state_.nt))}});
  }
  state_.nt = Sized(msg, field::kNt, bits);
  const BitString& d1 = Sized(msg, field::kD1, bits);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (CertResponse(entries[i].cert, *state_.nr, *state_.nt) == d1) {
      state_.matched = i;
      return Accept(Message{
          3,
          Direction::kReaderToTag,
          {MakeField(field::kD2,
                     ReaderConfirmation(entries[i].cert, *state_.nt))}});
    }
  }
  return Reject("no access-list entry matches the tag's response");
}

std::optional<Message> ReaderMachine::OnSearchReplies(const Message& msg) {
  const std::size_t bits = state_.params.bits;
  if (msg.fields.size() % 2 != 0) {
    throw ProtocolError("search replies must be (Nt, r) pairs");
  }
  const BitString& cert = matched_entry().cert;
  for (std::size_t k = 0; k < msg.fields.size(); k += 2) {
    const Field& nt = msg.fields[k];
    const Field& r = msg.fields[k + 1];
    if (nt.name != field::kNt || r.name != field::kResponse ||
        nt.value.width() != bits || r.value.width() != bits) {
      throw ProtocolError("malformed search reply at field " + std::to_string(k));
    }
    if (CertResponse(cert, *state_.nr, nt.value) == r.value) {
      state_.nt = nt.value;
      if (id_.family == Family::kLeeSearch) {
        return Accept(Message{
            3,
            Direction::kReaderToTag,
            {MakeField(field::kD2, ReaderConfirmation(cert, nt.value))}});
      }
      return Accept(std::nullopt);
    }
  }
  return Reject("no reply carries the target's response");
}

void ReaderMachine::Abort(std::string reason) {
  if (!done_) Reject(std::move(reason));
}

std::optional<Message> ReaderMachine::Reject(std::string reason) {
  done_ = true;
  accepted_ = false;
  rejection_ = std::move(reason);
  if (!IsSearch(id_.family)) state_.matched.reset();
  return std::nullopt;
}

std::optional<Message> ReaderMachine::Accept(std::optional<Message> last) {
  done_ = true;
  accepted_ = true;
  return last;
}

// ---------------------------------------------------------------------------
// Tag

TagMachine::TagMachine(ProtocolId id, TagState state, Role role,
                       double noise_rate, Rng rng)
    : id_(id),
      state_(std::move(state)),
      role_(role),
      noise_rate_(noise_rate),
      rng_(std::move(rng)) {
  if (noise_rate_ < 0.0 || noise_rate_ > 1.0) {
    throw std::invalid_argument("noise rate must lie in [0, 1]");
  }
}

std::optional<Message> TagMachine::Step(const Message& incoming) {
  RoleScope scope(role_);
  if (done_) throw StateError("tag session already finished");
  if (incoming.step != awaiting_) {
    throw StateError("tag expected step " + std::to_string(awaiting_) +
                     ", got step " + std::to_string(incoming.step));
  }
  if (incoming.direction == Direction::kTagToReader) {
    throw ProtocolError("tag received a tag-originated message");
  }
  if (IsSearch(id_.family)) {
    return incoming.step == 1 ? OnSearch(incoming) : VerifyReader(incoming);
  }
  return OnAuth(incoming);
}

std::optional<Message> TagMachine::OnAuth(const Message& msg) {
  const std::size_t bits = state_.params.bits;
  const bool enhanced = id_.variant == Variant::kEnhanced;
  const CertScheme scheme = SchemeFor(id_.family);
  const bool lee = id_.family == Family::kLeeAuth;

  if (enhanced) {
    if (msg.step == 1) {
      awaiting_ = 3;
      return PreauthResponse(state_, msg, rng_);
    }
    if (msg.step == 3) {
      PreauthRecoverRid(state_, msg);
      state_.cert = Certification(scheme, *state_.recovered_rid, state_.kt);
      const BitString d = CertResponse(*state_.cert, *state_.nr, *state_.nt);
      if (!lee) {
        return Finish(Message{4, Direction::kTagToReader, {MakeField(field::kD, d)}});
      }
      awaiting_ = 5;
      return Message{4, Direction::kTagToReader, {MakeField(field::kD1, d)}};
    }
    return VerifyReader(msg);
  }

  if (!lee) {
    if (msg.step == 1) {
      state_.nr = Sized(msg, field::kNr, bits);
      state_.nt = GenNonce(rng_, bits);
      awaiting_ = 3;
      return Message{2, Direction::kTagToReader, {MakeField(field::kNt, *state_.nt)}};
    }
    state_.recovered_rid = Sized(msg, field::kRid, bits);
    state_.cert = Certification(scheme, *state_.recovered_rid, state_.kt);
    return Finish(Message{
        4,
        Direction::kTagToReader,
        {MakeField(field::kD, CertResponse(*state_.cert, *state_.nr, *state_.nt))}});
  }

  if (msg.step == 1) {
    state_.nr = Sized(msg, field::kNr, bits);
    state_.recovered_rid = Sized(msg, field::kRid, bits);
    state_.nt = GenNonce(rng_, bits);
    state_.cert = Certification(scheme, *state_.recovered_rid, state_.kt);
    awaiting_ = 3;
    return Message{
        2,
        Direction::kTagToReader,
        {MakeField(field::kNt, *state_.nt),
         MakeField(field::kD1, CertResponse(*state_.cert, *state_.nr, *state_.nt))}};
  }
  return VerifyReader(msg);
}

std::optional<Message> TagMachine::OnSearch(const Message& msg) {
  const std::size_t bits = state_.params.bits;
  if (id_.variant == Variant::kEnhanced) {
    PresearchRecoverRid(state_, msg);
  } else {
    state_.nr = Sized(msg, field::kNr, bits);
    state_.recovered_rid = Sized(msg, field::kRid, bits);
  }
  const BitString& selector =
      Sized(msg, field::kSelector, state_.params.selector_bits);
  targeted_ =
      selector.SameAs(TruncateLeft(state_.tid, state_.params.selector_bits));

  if (!targeted_) {
    if (rng_.Bernoulli(noise_rate_)) {
      BitString nt = rng_.Bits(bits);
      BitString r = rng_.Bits(bits);
      return Finish(Message{2,
                            Direction::kTagToReader,
                            {MakeField(field::kNt, std::move(nt)),
                             MakeField(field::kResponse, std::move(r))}});
    }
    return Finish(std::nullopt);
  }

  state_.cert =
      Certification(SchemeFor(id_.family), *state_.recovered_rid, state_.kt);
  state_.nt = GenNonce(rng_, bits);
  Message reply{2,
                Direction::kTagToReader,
                {MakeField(field::kNt, *state_.nt),
                 MakeField(field::kResponse,
                           CertResponse(*state_.cert, *state_.nr, *state_.nt))}};
  if (id_.family == Family::kLeeSearch) {
    awaiting_ = 3;
    return reply;
  }
  return Finish(std::move(reply));
}

std::optional<Message> TagMachine::VerifyReader(const Message& msg) {
  if (!IsMutual(id_.family)) {
    throw StateError("unilateral protocols have no reader confirmation");
  }
  const BitString& d2 = Sized(msg, field::kD2, state_.params.bits);
  reader_verified_ = ReaderConfirmation(*state_.cert, *state_.nt) == d2;
  return Finish(std::nullopt);
}

std::optional<Message> TagMachine::Finish(std::optional<Message> out) {
  done_ = true;
  state_.nr.reset();
  state_.nt.reset();
  return out;
}

}  // namespace rfidpriv
