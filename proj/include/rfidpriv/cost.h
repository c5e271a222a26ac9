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

#ifndef RFIDPRIV_COST_H_
#define RFIDPRIV_COST_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "rfidpriv/protocol.h"
#include "rfidpriv/rng.h"

namespace rfidpriv {

struct CostReport {
  ProtocolId protocol;
  std::size_t n_tags = 0;
  double q = 0.0;
  std::size_t trials = 0;
  // Mean per session. The tag column counts only the responding (auth) or
  // searched-for (search) tag; everyone else lands in non_target_tag_hashes.
  double tag_hashes = 0.0;
  double reader_hashes_mean = 0.0;
  double non_target_tag_hashes = 0.0;
  int steps = 0;
  int nonces = 0;
  // Hash calls made outside any role scope; zero for a correctly metered
  // session.
  std::uint64_t unattributed_hashes = 0;
};

// Runs `trials` honest sessions of `id` over a fleet of `n_tags` tags and
// averages the per-role counters.
//
// For authentication the responding tag's access-list position is uniform
// per trial; for search the target is uniform and its reply lands at a
// uniform position among the decoys. Positions are stratified across trials,
// and all randomness is keyed by (rng, trial) only, so the original and
// enhanced variant of a family measured with the same `rng` replay identical
// placements.
//
// Throws std::logic_error if a session is rejected or if the step or nonce
// count differs between trials.
CostReport Measure(const ProtocolId& id, std::size_t n_tags, double q,
                   std::size_t trials, const Rng& rng,
                   const SessionParams& params = {});

enum class TableFormat { kMarkdown, kCsv };

TableFormat ParseTableFormat(std::string_view name);

// Markdown: one row per metric, one column per report.
// CSV: one row per report with columns
//   protocol,variant,N,q,trials,tag_hashes,reader_hashes_mean,steps,nonces,
//   non_target_tag_hashes_mean
// Both render numbers through FormatNumber, so they carry identical values.
std::string EmitTable(std::span<const CostReport> reports, TableFormat format);

// Integers print without a fractional part, everything else with three
// decimals.
std::string FormatNumber(double v);

}  // namespace rfidpriv

#endif  // RFIDPRIV_COST_H_
