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

#include "rfidpriv/cli.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rfidpriv/adversary.h"
#include "rfidpriv/cost.h"
#include "rfidpriv/fleet.h"
#include "rfidpriv/session.h"
#include "rfidpriv/transcript_json.h"

namespace rfidpriv {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw IoError("failed writing '" + path + "'");
}

nlohmann::json ReadJson(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string Dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

const std::map<std::string, std::string> kFamilies = {
    {"tan-auth", "tan-auth"}, {"tan-search", "tan-search"},
    {"lee-auth", "lee-auth"}, {"lee-search", "lee-search"}};
const std::map<std::string, std::string> kVariants = {
    {"original", "original"}, {"enhanced", "enhanced"}};

struct Common {
  std::uint64_t seed = 1;
  std::size_t bits = kDefaultBits;
  std::string out;
};

void AddCommon(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed for every random choice");
  cmd->add_option("--bits", c.bits, "Identity, nonce and digest width L")
      ->check([](const std::string& s) -> std::string {
        const long v = std::stol(s);
        return (v > 0 && v <= 256 && v % 8 == 0)
                   ? ""
                   : "L must be a positive multiple of 8 up to 256";
      });
  cmd->add_option("--out", c.out, "Output file");
}

SessionParams ParamsFor(const Common& c) {
  SessionParams p;
  p.bits = c.bits;
  if (p.selector_bits >= p.bits) p.selector_bits = p.bits / 2;
  return p;
}

// ---------------------------------------------------------------------------

struct ProvisionArgs {
  Common common;
  std::size_t n_tags = 0;
  std::size_t n_readers = 1;
  std::size_t tags_per_reader = 0;
  std::string access_list_out;
  std::string scheme = "tan-f";
};

int DoProvision(const ProvisionArgs& a, std::ostream& out) {
  Rng rng(a.common.seed);
  const ProvisionedSystem sys =
      ProvisionSystem({.n_tags = a.n_tags,
                       .n_readers = a.n_readers,
                       .bits = a.common.bits,
                       .tags_per_reader = a.tags_per_reader},
                      rng);
  const std::string text = Dump(DirectoryToJson(sys.directory));
  if (a.common.out.empty()) {
    out << text;
  } else {
    WriteFile(a.common.out, text);
  }
  if (!a.access_list_out.empty()) {
    const AccessList list = DeriveAccessList(sys.directory, sys.rids.front(),
                                             ParseCertScheme(a.scheme));
    WriteFile(a.access_list_out, Dump(AccessListToJson(list)));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct RunArgs {
  Common common;
  std::string family = "tan-auth";
  std::string variant = "enhanced";
  std::size_t n_tags = 10;
  double q = 0.0;
  std::string dir;
  std::size_t reader = 0;
  std::optional<std::size_t> tag;
  bool exclude_tag = false;
};

void PrintOutcome(const Transcript& t, std::ostream& out) {
  out << "protocol: " << ToString(t.protocol) << "\n"
      << "steps: " << t.messages.size() << "\n"
      << "accepted: " << (t.outcome.accepted ? "true" : "false") << "\n";
  if (!t.outcome.accepted) out << "rejected: " << t.outcome.rejection << "\n";
  if (t.outcome.matched_tid) {
    out << "matched_tid: " << t.outcome.matched_tid->ToHex() << "\n";
  }
  if (t.outcome.rid_recovered_by_tag) {
    out << "rid_recovered: " << t.outcome.rid_recovered_by_tag->ToHex() << "\n";
  }
  out << "mutual: " << (t.outcome.mutual ? "true" : "false") << "\n";
}

int DoRun(const RunArgs& a, std::ostream& out) {
  const ProtocolId id{ParseFamily(a.family), ParseVariant(a.variant)};
  const SessionParams params = ParamsFor(a.common);
  const Rng root(a.common.seed);

  ServerDirectory dir;
  if (a.dir.empty()) {
    Rng fleet = root.Fork(0);
    dir = ProvisionSystem(
              {.n_tags = a.n_tags, .n_readers = 1, .bits = params.bits}, fleet)
              .directory;
  } else {
    dir = DirectoryFromJson(ReadJson(a.dir));
  }
  if (a.reader >= dir.readers().size()) {
    throw std::invalid_argument("--reader " + std::to_string(a.reader) +
                                " out of range");
  }
  if (dir.tags().empty()) throw std::invalid_argument("directory has no tags");
  const BitString rid = dir.readers()[a.reader];
  if (rid.width() != params.bits) {
    throw std::invalid_argument("directory identities are " +
                                std::to_string(rid.width()) +
                                " bits; pass --bits to match");
  }

  std::size_t tag_index = 0;
  if (a.tag) {
    tag_index = *a.tag;
  } else {
    Rng pick = root.Fork(1);
    tag_index = pick.UniformInt(dir.tags().size());
  }
  if (tag_index >= dir.tags().size()) {
    throw std::invalid_argument("--tag " + std::to_string(tag_index) +
                                " out of range");
  }
  const TagRecord chosen = dir.tags()[tag_index];
  if (a.exclude_tag) dir.Deauthorize(rid, chosen.tid);

  ReaderState reader{.rid = rid,
                     .access_list = DeriveAccessList(dir, rid, SchemeFor(id.family)),
                     .params = params};
  std::vector<TagState> tags;
  std::optional<BitString> target;
  if (IsSearch(id.family)) {
    for (const TagRecord& t : dir.tags()) {
      tags.push_back({.tid = t.tid, .kt = t.kt, .params = params});
    }
    target = chosen.tid;
  } else {
    tags.push_back({.tid = chosen.tid, .kt = chosen.kt, .params = params});
  }
  const SessionResult result =
      RunProtocol(id, std::move(reader), std::move(tags), target,
                  {.noise_rate = a.q, .session_id = a.common.seed}, root.Fork(2));
  if (!a.common.out.empty()) {
    WriteFile(a.common.out, Dump(TranscriptToJson(result.transcript)));
  }
  PrintOutcome(result.transcript, out);
  return result.transcript.outcome.accepted ? kExitOk : kExitRejected;
}

// ---------------------------------------------------------------------------

struct AttackArgs {
  Common common;
  std::string attack;
  std::string family = "tan-auth";
  std::string variant = "enhanced";
  std::size_t trials = 1000;
};

int DoAttack(const AttackArgs& a, std::ostream& out) {
  const ProtocolId id{ParseFamily(a.family), ParseVariant(a.variant)};
  const AttackReport report = RunAttack(ParseAttack(a.attack), id, a.trials,
                                        a.common.seed, ParamsFor(a.common));
  const std::string text = Dump(AttackReportToJson(report));
  if (!a.common.out.empty()) WriteFile(a.common.out, text);
  out << text;
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
  Common common;
  std::string kind;
  std::vector<std::size_t> n = {100};
  std::vector<double> q = {0.5};
  std::size_t trials = 500;
  std::string format = "md";
};

int DoBench(const BenchArgs& a, std::ostream& out) {
  const bool search = a.kind == "search";
  const Family tan = search ? Family::kTanSearch : Family::kTanAuth;
  const Family lee = search ? Family::kLeeSearch : Family::kLeeAuth;
  const std::vector<double> qs = search ? a.q : std::vector<double>{0.0};
  const SessionParams params = ParamsFor(a.common);
  const Rng root(a.common.seed);

  std::vector<CostReport> reports;
  std::uint64_t config = 0;
  for (std::size_t n : a.n) {
    for (double q : qs) {
      // Both variants of a family share one stream so their costs are paired.
      const Rng stream = root.Fork(config++);
      for (Family f : {tan, lee}) {
        for (Variant v : {Variant::kOriginal, Variant::kEnhanced}) {
          reports.push_back(Measure({f, v}, n, q, a.trials, stream.Fork(
                                        static_cast<std::uint64_t>(f)), params));
        }
      }
    }
  }
  const std::string text = EmitTable(reports, ParseTableFormat(a.format));
  if (!a.common.out.empty()) WriteFile(a.common.out, text);
  out << text;
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct InspectArgs {
  std::string in;
};

int DoInspect(const InspectArgs& a, std::ostream& out, std::ostream& err) {
  const Transcript t = TranscriptFromJson(ReadJson(a.in));
  for (const Message& m : t.messages) {
    out << "step " << m.step << " " << DirectionName(m.direction) << ":";
    for (const Field& f : m.fields) out << " " << f.name << "=" << f.value.ToHex();
    out << "\n";
  }
  PrintOutcome(t, out);
  try {
    ValidateTranscript(t);
  } catch (const ProtocolError& e) {
    err << "invalid transcript: " << e.what() << "\n";
    return kExitRejected;
  }
  out << "valid: true\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Reader-privacy lab for server-less RFID protocols", "rfidlab"};
  app.require_subcommand(1);

  ProvisionArgs provision;
  auto* p = app.add_subcommand("provision", "Create a tag/reader directory");
  AddCommon(p, provision.common);
  p->add_option("--n-tags", provision.n_tags, "Number of tags")
      ->required()
      ->check(CLI::PositiveNumber);
  p->add_option("--n-readers", provision.n_readers, "Number of readers")
      ->check(CLI::PositiveNumber);
  p->add_option("--tags-per-reader", provision.tags_per_reader,
                "Tags authorized per reader (0 = all)");
  p->add_option("--access-list-out", provision.access_list_out,
                "Also write the first reader's access list here");
  p->add_option("--scheme", provision.scheme, "Certification scheme")
      ->check(CLI::IsMember({"tan-f", "lee-h", "chun-enc"}));

  RunArgs run;
  auto* r = app.add_subcommand("run", "Run one protocol session");
  AddCommon(r, run.common);
  r->add_option("--family", run.family)->check(CLI::IsMember(kFamilies));
  r->add_option("--variant", run.variant)->check(CLI::IsMember(kVariants));
  r->add_option("--n-tags", run.n_tags, "Tags to provision without --dir")
      ->check(CLI::PositiveNumber);
  r->add_option("--q", run.q, "Decoy probability for search")
      ->check(CLI::Range(0.0, 1.0));
  r->add_option("--dir", run.dir, "Directory file from 'provision'");
  r->add_option("--reader", run.reader, "Reader index in the directory");
  r->add_option("--tag", run.tag, "Responding or searched-for tag index");
  r->add_flag("--exclude-tag", run.exclude_tag,
              "Remove the chosen tag from the reader's access list");

  AttackArgs attack;
  auto* at = app.add_subcommand("attack", "Run an adversary experiment");
  AddCommon(at, attack.common);
  at->add_option("attack", attack.attack, "plaintext-rid | linkability | replay")
      ->required()
      ->check(CLI::IsMember({"plaintext-rid", "linkability", "replay"}));
  at->add_option("--family", attack.family)->check(CLI::IsMember(kFamilies));
  at->add_option("--variant", attack.variant)->check(CLI::IsMember(kVariants));
  at->add_option("--trials", attack.trials)->check(CLI::PositiveNumber);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Tabulate protocol costs");
  AddCommon(b, bench.common);
  b->add_option("kind", bench.kind, "auth | search")
      ->required()
      ->check(CLI::IsMember({"auth", "search"}));
  b->add_option("--n,--n-tags", bench.n, "Fleet sizes")->check(CLI::PositiveNumber);
  b->add_option("--q", bench.q, "Decoy probabilities")->check(CLI::Range(0.0, 1.0));
  b->add_option("--trials", bench.trials)->check(CLI::PositiveNumber);
  b->add_option("--format", bench.format)->check(CLI::IsMember({"md", "csv"}));

  InspectArgs inspect;
  auto* in = app.add_subcommand("inspect", "Print and validate a transcript");
  in->add_option("--in", inspect.in, "Transcript file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*p) return DoProvision(provision, out);
    if (*r) return DoRun(run, out);
    if (*at) return DoAttack(attack, out);
    if (*b) return DoBench(bench, out);
    if (*in) return DoInspect(inspect, out, err);
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const AuthorizationError& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rfidpriv
