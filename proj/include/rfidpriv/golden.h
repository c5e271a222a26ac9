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

#ifndef RFIDPRIV_GOLDEN_H_
#define RFIDPRIV_GOLDEN_H_

#include <string>
#include <vector>

#include "json.hpp"

namespace rfidpriv {

struct GoldenReport {
  int checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return checked > 0 && failures.empty(); }
};

// Validates Hash, TruncateLeft and Concat against a golden-vector document:
//   {"bits": L,
//    "vectors":  [{"label": "H"|"F", "input-hex", "output-hex"}],
//    "truncate": [{"label", "input-hex", "m", "output-hex"}],
//    "concat":   [{"fields": [hex...], "output-hex"}]}
// The document is produced by an independent SHA-256 implementation.
GoldenReport CheckGoldenVectors(const nlohmann::json& doc);

}  // namespace rfidpriv

#endif  // RFIDPRIV_GOLDEN_H_
