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

#include <algorithm>

#include "rfidpriv/protocol.h"

namespace rfidpriv {

bool IsSearch(Family family) {
  return family == Family::kTanSearch || family == Family::kLeeSearch;
}

bool IsMutual(Family family) {
  return family == Family::kLeeAuth || family == Family::kLeeSearch;
}

CertScheme SchemeFor(Family family) {
  return IsMutual(family) ? CertScheme::kLeeH : CertScheme::kTanF;
}

int StepCount(const ProtocolId& id) {
  const bool enhanced = id.variant == Variant::kEnhanced;
  switch (id.family) {
    case Family::kTanAuth:
      return 4;
    case Family::kLeeAuth:
      return enhanced ? 5 : 3;
    case Family::kTanSearch:
      return 2;
    case Family::kLeeSearch:
      return 3;
  }
  return 0;
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kTanAuth:
      return "tan-auth";
    case Family::kTanSearch:
      return "tan-search";
    case Family::kLeeAuth:
      return "lee-auth";
    case Family::kLeeSearch:
      return "lee-search";
  }
  return "?";
}

std::string_view VariantName(Variant variant) {
  return variant == Variant::kOriginal ? "original" : "enhanced";
}

Family ParseFamily(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (FamilyName(f) == name) return f;
  }
  throw std::invalid_argument("unknown protocol family '" + std::string(name) +
                              "'");
}

Variant ParseVariant(std::string_view name) {
  if (name == "original") return Variant::kOriginal;
  if (name == "enhanced") return Variant::kEnhanced;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

std::string ToString(const ProtocolId& id) {
  return std::string(FamilyName(id.family)) + "/" +
         std::string(VariantName(id.variant));
}

bool IsNonceField(std::string_view name) {
  return name == field::kNr || name == field::kNt;
}

std::string_view DirectionName(Direction d) {
  switch (d) {
    case Direction::kReaderToTag:
      return "reader-to-tag";
    case Direction::kTagToReader:
      return "tag-to-reader";
    case Direction::kReaderBroadcast:
      return "reader-broadcast";
  }
  return "?";
}

Direction ParseDirection(std::string_view name) {
  for (Direction d : {Direction::kReaderToTag, Direction::kTagToReader,
                      Direction::kReaderBroadcast}) {
    if (DirectionName(d) == name) return d;
  }
  throw std::invalid_argument("unknown direction '" + std::string(name) + "'");
}

const BitString& Message::Get(std::string_view name) const {
  for (const Field& f : fields) {
    if (f.name == name) return f.value;
  }
  throw ProtocolError("step " + std::to_string(step) + " message has no '" +
                      std::string(name) + "' field");
}

bool Message::Has(std::string_view name) const {
  return std::any_of(fields.begin(), fields.end(),
                     [&](const Field& f) { return f.name == name; });
}

std::vector<std::string_view> FieldSchema(const ProtocolId& id, int step) {
  using namespace field;
  const bool enhanced = id.variant == Variant::kEnhanced;
  if (IsSearch(id.family)) {
    switch (step) {
      case 1:
        return {enhanced ? kCipher : kRid, kNr, kSelector};
      case 2:
        return {kNt, kResponse};
      case 3:
        if (id.family == Family::kLeeSearch) return {kD2};
        break;
    }
    throw ProtocolError("no step " + std::to_string(step) + " in " +
                        ToString(id));
  }
  if (enhanced) {
    switch (step) {
      case 1:
        return {kNr};
      case 2:
        return {kDigest, kNt};
      case 3:
        return {kCipher};
      case 4:
        return {id.family == Family::kTanAuth ? kD : kD1};
      case 5:
        if (id.family == Family::kLeeAuth) return {kD2};
        break;
    }
  } else if (id.family == Family::kTanAuth) {
    switch (step) {
      case 1:
        return {kNr};
      case 2:
        return {kNt};
      case 3:
        return {kRid};
      case 4:
        return {kD};
    }
  } else {
    switch (step) {
      case 1:
        return {kNr, kRid};
      case 2:
        return {kNt, kD1};
      case 3:
        return {kD2};
    }
  }
  throw ProtocolError("no step " + std::to_string(step) + " in " +
                      ToString(id));
}

Direction StepDirection(const ProtocolId& id, int step) {
  if (step < 1 || step > StepCount(id)) {
    throw ProtocolError("no step " + std::to_string(step) + " in " +
                        ToString(id));
  }
  if (step == 1) return Direction::kReaderBroadcast;
  return step % 2 == 0 ? Direction::kTagToReader : Direction::kReaderToTag;
}

void ValidateTranscript(const Transcript& t) {
  const int expected = StepCount(t.protocol);
  if (static_cast<int>(t.messages.size()) > expected) {
    throw ProtocolError(ToString(t.protocol) + " transcript has " +
                        std::to_string(t.messages.size()) +
                        " messages, at most " + std::to_string(expected) +
                        " allowed");
  }
  if (t.outcome.accepted && static_cast<int>(t.messages.size()) != expected) {
    throw ProtocolError("accepted " + ToString(t.protocol) + " session has " +
                        std::to_string(t.messages.size()) + " messages, want " +
                        std::to_string(expected));
  }
  if (t.outcome.accepted && !t.outcome.matched_tid) {
    throw ProtocolError("accepted session without a matched TID");
  }
  if (t.outcome.mutual && !IsMutual(t.protocol.family)) {
    throw ProtocolError("mutual outcome on a unilateral protocol");
  }
  for (std::size_t i = 0; i < t.messages.size(); ++i) {
    const Message& m = t.messages[i];
    const int step = static_cast<int>(i) + 1;
    if (m.step != step) {
      throw ProtocolError("message " + std::to_string(i) + " has step " +
                          std::to_string(m.step));
    }
    if (m.direction != StepDirection(t.protocol, step)) {
      throw ProtocolError("step " + std::to_string(step) + " has direction " +
                          std::string(DirectionName(m.direction)));
    }
    const auto schema = FieldSchema(t.protocol, step);
    const bool repeated = IsSearch(t.protocol.family) && step == 2;
    if (repeated ? m.fields.size() % schema.size() != 0
                 : m.fields.size() != schema.size()) {
      throw ProtocolError("step " + std::to_string(step) + " has " +
                          std::to_string(m.fields.size()) + " fields");
    }
    for (std::size_t k = 0; k < m.fields.size(); ++k) {
      if (m.fields[k].name != schema[k % schema.size()]) {
        throw ProtocolError("step " + std::to_string(step) + " field " +
                            std::to_string(k) + " is '" + m.fields[k].name +
                            "', want '" +
                            std::string(schema[k % schema.size()]) + "'");
      }
    }
  }
}

}  // namespace rfidpriv
