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

#ifndef RFIDPRIV_PROTOCOL_H_
#define RFIDPRIV_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rfidpriv/bitstring.h"
#include "rfidpriv/crypto.h"
#include "rfidpriv/fleet.h"

namespace rfidpriv {

enum class Family { kTanAuth, kTanSearch, kLeeAuth, kLeeSearch };
enum class Variant { kOriginal, kEnhanced };

struct ProtocolId {
  Family family = Family::kTanAuth;
  Variant variant = Variant::kOriginal;

  bool operator==(const ProtocolId&) const = default;
};

inline constexpr Family kAllFamilies[] = {Family::kTanAuth, Family::kTanSearch,
                                          Family::kLeeAuth, Family::kLeeSearch};

bool IsSearch(Family family);
// Lee protocols authenticate the reader to the tag as well.
bool IsMutual(Family family);
CertScheme SchemeFor(Family family);
// Messages in a completed session: Tan auth 4/4, Lee auth 3/5, Tan search
// 2/2, Lee search 3/3 (original/enhanced).
int StepCount(const ProtocolId& id);

std::string_view FamilyName(Family family);
std::string_view VariantName(Variant variant);
Family ParseFamily(std::string_view name);
Variant ParseVariant(std::string_view name);
std::string ToString(const ProtocolId& id);

// Field names used on the wire.
namespace field {
inline constexpr std::string_view kNr = "Nr";
inline constexpr std::string_view kNt = "Nt";
inline constexpr std::string_view kRid = "RID";
inline constexpr std::string_view kDigest = "digest";
inline constexpr std::string_view kCipher = "cipher";
inline constexpr std::string_view kSelector = "sel";
inline constexpr std::string_view kResponse = "r";
inline constexpr std::string_view kD = "d";
inline constexpr std::string_view kD1 = "d1";
inline constexpr std::string_view kD2 = "d2";
}  // namespace field

// Nonces are public per-session randomness in every variant.
bool IsNonceField(std::string_view name);

enum class Direction { kReaderToTag, kTagToReader, kReaderBroadcast };
std::string_view DirectionName(Direction d);
Direction ParseDirection(std::string_view name);

// Malformed message: wrong step, missing field or wrong width.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A machine was driven out of order.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The reader found no access-list entry matching the tag's response.
class NoMatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The reader was asked to search for a tag outside its access list.
class NotAuthorizedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Field {
  std::string name;
  BitString value;
};

struct Message {
  int step = 0;
  Direction direction = Direction::kReaderToTag;
  std::vector<Field> fields;

  // The single field called `name`; ProtocolError if absent.
  const BitString& Get(std::string_view name) const;
  bool Has(std::string_view name) const;
};

// Field names carried at `step` of `id`, in order. Search replies (step 2)
// repeat the {Nt, r} pair once per responding tag; this returns one pair.
std::vector<std::string_view> FieldSchema(const ProtocolId& id, int step);
Direction StepDirection(const ProtocolId& id, int step);

struct Outcome {
  bool accepted = false;
  std::optional<BitString> matched_tid;
  std::optional<BitString> rid_recovered_by_tag;
  bool mutual = false;
  // Why the reader rejected, empty when accepted.
  std::string rejection;
};

struct Transcript {
  ProtocolId protocol;
  std::uint64_t session_id = 0;
  std::vector<Message> messages;
  Outcome outcome;
};

// Throws ProtocolError if field names do not follow FieldSchema, if step
// indices are not 1..n in order, or if an accepted session does not have
// StepCount(protocol) messages.
void ValidateTranscript(const Transcript& t);

struct SessionParams {
  std::size_t bits = kDefaultBits;
  // Width of the TID prefix a search broadcast uses to address its target.
  std::size_t selector_bits = 32;
};

struct ReaderState {
  BitString rid;
  AccessList access_list;
  SessionParams params;
  std::optional<BitString> nr;
  std::optional<BitString> nt;
  std::optional<std::size_t> matched;
};

// Nonces and recovered values live only for one session; a machine is
// constructed per session.
struct TagState {
  BitString tid;
  BitString kt;
  SessionParams params;
  std::optional<BitString> nr;
  std::optional<BitString> nt;
  std::optional<BitString> recovered_rid;
  std::optional<BitString> cert;
};

}  // namespace rfidpriv

#endif  // RFIDPRIV_PROTOCOL_H_
