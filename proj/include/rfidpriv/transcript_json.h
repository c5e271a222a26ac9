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

#ifndef RFIDPRIV_TRANSCRIPT_JSON_H_
#define RFIDPRIV_TRANSCRIPT_JSON_H_

#include "json.hpp"
#include "rfidpriv/protocol.h"

namespace rfidpriv {

// {protocol: {family, variant}, session_id,
//  messages: [{step, direction, fields: [{name, hex}]}],
//  outcome: {accepted, matched_tid?, rid_recovered?, mutual}}
// Keys are emitted in this order; optional outcome keys are omitted when
// unset. All values are lowercase hex.
nlohmann::ordered_json TranscriptToJson(const Transcript& t);

// Parses the layout above. Field widths are taken from the hex length.
Transcript TranscriptFromJson(const nlohmann::json& j);

}  // namespace rfidpriv

#endif  // RFIDPRIV_TRANSCRIPT_JSON_H_
