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

#include "rfidpriv/preprotocol.h"

namespace rfidpriv {
namespace {

const BitString& Require(const std::optional<BitString>& v, const char* what) {
  if (!v) throw StateError(std::string("missing ") + what);
  return *v;
}

void CheckWidth(const BitString& v, std::size_t bits, std::string_view name) {
  if (v.width() != bits) {
    throw ProtocolError("field '" + std::string(name) + "' is " +
                        std::to_string(v.width()) + " bits, want " +
                        std::to_string(bits));
  }
}

const BitString& GetField(const Message& msg, std::string_view name,
                          std::size_t bits) {
  const BitString& v = msg.Get(name);
  CheckWidth(v, bits, name);
  return v;
}

}  // namespace

BitString TidNonceDigest(const BitString& tid, const BitString& nr) {
  return HashFields(HashLabel::kH, {tid, nr}, tid.width());
}

BitString AuthSessionKey(const BitString& tid, const BitString& nt,
                         const BitString& nr) {
  return HashFields(HashLabel::kH, {tid, nt, nr}, tid.width());
}

Message PreauthChallenge(ReaderState& reader, Rng& rng) {
  reader.nr = GenNonce(rng, reader.params.bits);
  reader.nt.reset();
  reader.matched.reset();
  return {1, Direction::kReaderBroadcast, {{std::string(field::kNr), *reader.nr}}};
}

Message PreauthResponse(TagState& tag, const Message& msg1, Rng& rng) {
  const std::size_t bits = tag.params.bits;
  tag.nr = GetField(msg1, field::kNr, bits);
  tag.nt = GenNonce(rng, bits);
  tag.recovered_rid.reset();
  tag.cert.reset();
  return {2,
          Direction::kTagToReader,
          {{std::string(field::kDigest), TidNonceDigest(tag.tid, *tag.nr)},
           {std::string(field::kNt), *tag.nt}}};
}

Message PreauthDeliverRid(ReaderState& reader, const Message& msg2) {
  const std::size_t bits = reader.params.bits;
  const BitString& nr = Require(reader.nr, "reader nonce");
  const BitString& digest = GetField(msg2, field::kDigest, bits);
  const BitString& nt = GetField(msg2, field::kNt, bits);
  const auto& entries = reader.access_list.entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (TidNonceDigest(entries[i].tid, nr) == digest) {
      reader.matched = i;
      reader.nt = nt;
      const BitString key = AuthSessionKey(entries[i].tid, nt, nr);
      return {3,
              Direction::kReaderToTag,
              {{std::string(field::kCipher), Xor(key, reader.rid)}}};
    }
  }
  throw NoMatchError("no access-list entry matches the tag's digest");
}

BitString PreauthRecoverRid(TagState& tag, const Message& msg3) {
  const BitString& cipher = GetField(msg3, field::kCipher, tag.params.bits);
  const BitString key = AuthSessionKey(tag.tid, Require(tag.nt, "tag nonce"),
                                       Require(tag.nr, "reader nonce"));
  tag.recovered_rid = Xor(cipher, key);
  return *tag.recovered_rid;
}

Message PresearchBroadcast(ReaderState& reader, const BitString& target_tid,
                           Rng& rng) {
  const auto& entries = reader.access_list.entries;
  std::optional<std::size_t> index;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].tid.SameAs(target_tid)) {
      index = i;
      break;
    }
  }
  if (!index) {
    throw NotAuthorizedError("target " + target_tid.ToHex() +
                             " is not in the reader's access list");
  }
  reader.matched = index;
  reader.nr = GenNonce(rng, reader.params.bits);
  reader.nt.reset();
  const BitString key = TidNonceDigest(target_tid, *reader.nr);
  return {1,
          Direction::kReaderBroadcast,
          {{std::string(field::kCipher), Xor(key, reader.rid)},
           {std::string(field::kNr), *reader.nr}}};
}

BitString PresearchRecoverRid(TagState& tag, const Message& msg) {
  const std::size_t bits = tag.params.bits;
  tag.nr = GetField(msg, field::kNr, bits);
  const BitString& cipher = GetField(msg, field::kCipher, bits);
  tag.recovered_rid = Xor(cipher, TidNonceDigest(tag.tid, *tag.nr));
  return *tag.recovered_rid;
}

}  // namespace rfidpriv
