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

#ifndef RFIDPRIV_SESSION_H_
#define RFIDPRIV_SESSION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "rfidpriv/meter.h"
#include "rfidpriv/protocol.h"
#include "rfidpriv/rng.h"

namespace rfidpriv {

struct ChannelOptions {
  // Probability that each non-target tag answers a search broadcast with a
  // decoy. Must lie in [0, 1].
  double noise_rate = 0.0;
  // Where the target's reply lands among all search replies, as a fraction
  // in [0, 1). Unset means a uniformly random position.
  std::optional<double> target_slot;
  std::uint64_t session_id = 0;
};

struct SessionResult {
  Transcript transcript;
  // Hash and nonce events of this session, by role.
  OperationCounts counts;
};

// Runs one complete session over a lossless channel by folding the reader's
// and tags' Step() calls. Authentication families take exactly one tag;
// search families take the whole population and a target TID.
//
// `rng` is only forked, never advanced: the reader, each tag (by index) and
// the channel draw from their own child streams. Running the original and
// enhanced variant with the same `rng` therefore sees the same nonces, decoys
// and reply order.
SessionResult RunProtocol(const ProtocolId& id, ReaderState reader,
                          std::vector<TagState> tags,
                          std::optional<BitString> target_tid,
                          const ChannelOptions& channel, const Rng& rng);

// Child streams used by RunProtocol, exposed so step-wise drivers can
// reproduce a session exactly.
Rng ReaderStream(const Rng& session);
Rng TagStream(const Rng& session, std::size_t tag_index);
Rng ChannelStream(const Rng& session);

}  // namespace rfidpriv

#endif  // RFIDPRIV_SESSION_H_
