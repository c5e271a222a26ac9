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

#include "rfidpriv/cost.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "rfidpriv/fleet.h"
#include "rfidpriv/session.h"

namespace rfidpriv {

CostReport Measure(const ProtocolId& id, std::size_t n_tags, double q,
                   std::size_t trials, const Rng& rng,
                   const SessionParams& params) {
  if (trials == 0) throw std::invalid_argument("measure needs at least one trial");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("q must lie in [0, 1]");

  Rng fleet_rng = rng.Fork(0);
  const ProvisionedSystem sys =
      ProvisionSystem({.n_tags = n_tags, .n_readers = 1, .bits = params.bits},
                      fleet_rng);
  const BitString& rid = sys.rids.front();
  const AccessList list =
      DeriveAccessList(sys.directory, rid, SchemeFor(id.family));

  std::vector<TagState> population;
  for (const TagRecord& t : sys.directory.tags()) {
    population.push_back({.tid = t.tid, .kt = t.kt, .params = params});
  }

  Rng placement_rng = rng.Fork(1);
  const std::vector<double> slots = StratifiedUniforms(trials, placement_rng);
  const Rng trial_root = rng.Fork(2);

  CostReport report;
  report.protocol = id;
  report.n_tags = n_tags;
  report.q = IsSearch(id.family) ? q : 0.0;
  report.trials = trials;

  RoleCounts hashes;
  for (std::size_t t = 0; t < trials; ++t) {
    const Rng session = trial_root.Fork(t);
    ReaderState reader{.rid = rid, .access_list = list, .params = params};
    SessionResult result;
    if (IsSearch(id.family)) {
      Rng pick = session.Fork(7);
      const BitString target = population[pick.UniformInt(n_tags)].tid;
      result = RunProtocol(id, std::move(reader), population, target,
                           {.noise_rate = q, .target_slot = slots[t], .session_id = t},
                           session);
    } else {
      const auto pos = static_cast<std::size_t>(
          std::floor(slots[t] * static_cast<double>(list.entries.size())));
      const TagRecord* tag = sys.directory.FindTag(list.entries[pos].tid);
      result = RunProtocol(id, std::move(reader),
                           {{.tid = tag->tid, .kt = tag->kt, .params = params}},
                           std::nullopt, {.session_id = t}, session);
    }
    if (!result.transcript.outcome.accepted) {
      throw std::logic_error("honest " + ToString(id) + " session " +
                             std::to_string(t) + " was rejected: " +
                             result.transcript.outcome.rejection);
    }
    const int steps = static_cast<int>(result.transcript.messages.size());
    const int nonces = static_cast<int>(result.counts.nonces.total());
    if (t == 0) {
      report.steps = steps;
      report.nonces = nonces;
    } else if (steps != report.steps || nonces != report.nonces) {
      throw std::logic_error("step or nonce count varies between trials of " +
                             ToString(id));
    }
    hashes += result.counts.hashes;
  }
  const auto n = static_cast<double>(trials);
  report.tag_hashes = static_cast<double>(hashes.tag) / n;
  report.reader_hashes_mean = static_cast<double>(hashes.reader) / n;
  report.non_target_tag_hashes = static_cast<double>(hashes.non_target_tag) / n;
  report.unattributed_hashes = hashes.unattributed;
  return report;
}

TableFormat ParseTableFormat(std::string_view name) {
  if (name == "md" || name == "markdown") return TableFormat::kMarkdown;
  if (name == "csv") return TableFormat::kCsv;
  throw std::invalid_argument("unknown table format '" + std::string(name) + "'");
}

std::string FormatNumber(double v) {
  char buf[64];
  if (v == std::floor(v) && std::fabs(v) < 1e15) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.3f", v);
  }
  return buf;
}

namespace {

std::string ColumnTitle(const CostReport& r) {
  std::string title = ToString(r.protocol) + " N=" + std::to_string(r.n_tags);
  if (IsSearch(r.protocol.family)) title += " q=" + FormatNumber(r.q);
  return title;
}

std::string Markdown(std::span<const CostReport> reports) {
  std::ostringstream out;
  out << "| Metric |";
  for (const CostReport& r : reports) out << ' ' << ColumnTitle(r) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < reports.size(); ++i) out << "---|";
  out << '\n';
  if (reports.empty()) return out.str();

  auto row = [&](std::string_view metric, auto cell) {
    out << "| " << metric << " |";
    for (const CostReport& r : reports) out << ' ' << cell(r) << " |";
    out << '\n';
  };
  row("Authentication", [](const CostReport& r) {
    return std::string(IsMutual(r.protocol.family) ? "mutual" : "unilateral");
  });
  row("Privacy of mobile reader holders", [](const CostReport& r) {
    return std::string(r.protocol.variant == Variant::kEnhanced ? "protected"
                                                                 : "uncovered");
  });
  row("Number of communication steps",
      [](const CostReport& r) { return std::to_string(r.steps); });
  row("Number of nonce",
      [](const CostReport& r) { return std::to_string(r.nonces); });
  row("Number of hash operations on a tag",
      [](const CostReport& r) { return FormatNumber(r.tag_hashes); });
  row("Number of hash operations on a reader (average)",
      [](const CostReport& r) { return FormatNumber(r.reader_hashes_mean); });
  row("Hash operations on non-target tags (average, all tags)",
      [](const CostReport& r) { return FormatNumber(r.non_target_tag_hashes); });
  row("Trials", [](const CostReport& r) { return std::to_string(r.trials); });
  return out.str();
}

std::string Csv(std::span<const CostReport> reports) {
  std::ostringstream out;
  out << "protocol,variant,N,q,trials,tag_hashes,reader_hashes_mean,steps,"
         "nonces,non_target_tag_hashes_mean\n";
  for (const CostReport& r : reports) {
    out << FamilyName(r.protocol.family) << ',' << VariantName(r.protocol.variant)
        << ',' << r.n_tags << ',' << FormatNumber(r.q) << ',' << r.trials << ','
        << FormatNumber(r.tag_hashes) << ',' << FormatNumber(r.reader_hashes_mean)
        << ',' << r.steps << ',' << r.nonces << ','
        << FormatNumber(r.non_target_tag_hashes) << '\n';
  }
  return out.str();
}

}  // namespace

std::string EmitTable(std::span<const CostReport> reports, TableFormat format) {
  return format == TableFormat::kCsv ? Csv(reports) : Markdown(reports);
}

}  // namespace rfidpriv
