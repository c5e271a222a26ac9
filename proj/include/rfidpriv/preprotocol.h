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

#ifndef RFIDPRIV_PREPROTOCOL_H_
#define RFIDPRIV_PREPROTOCOL_H_

#include "rfidpriv/protocol.h"
#include "rfidpriv/rng.h"

// The two exchanges that deliver a reader identity in session-random
// ciphertext before an existing protocol runs.
//
// Authentication (three messages):
//   1. reader broadcasts Nr
//   2. tag answers digest = H(TID || Nr) and its own Nt
//   3. reader finds the TID whose digest matches, derives
//      k = H(TID || Nt || Nr) and sends k XOR RID
//
// Search (one broadcast): reader sends H(TID || Nr) XOR RID together with Nr;
// only the addressed tag derives the same key.
namespace rfidpriv {

Message PreauthChallenge(ReaderState& reader, Rng& rng);

// Throws ProtocolError if `msg1` lacks Nr.
Message PreauthResponse(TagState& tag, const Message& msg1, Rng& rng);

// Scans the access list in order, one hash per tried entry, then one hash for
// the session key. Throws NoMatchError when no entry matches; in that case
// nothing about the RID is produced.
Message PreauthDeliverRid(ReaderState& reader, const Message& msg2);

// A stale or forged `msg3` yields an unrelated value, not an error.
BitString PreauthRecoverRid(TagState& tag, const Message& msg3);

// Returns {cipher, Nr}. Throws NotAuthorizedError if the target is not in the
// reader's access list.
Message PresearchBroadcast(ReaderState& reader, const BitString& target_tid,
                           Rng& rng);

// Every listening tag runs this; tags other than the target recover noise.
BitString PresearchRecoverRid(TagState& tag, const Message& msg);

// H(tid || Nr): the pre-protocol digest and the search session key.
BitString TidNonceDigest(const BitString& tid, const BitString& nr);
// H(tid || Nt || Nr): the authentication session key.
BitString AuthSessionKey(const BitString& tid, const BitString& nt,
                         const BitString& nr);

}  // namespace rfidpriv

#endif  // RFIDPRIV_PREPROTOCOL_H_
