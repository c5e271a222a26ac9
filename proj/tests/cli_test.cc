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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

namespace rfidpriv {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Rfidlab(std::vector<std::string> args) {
  args.insert(args.begin(), "rfidlab");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rfidlab_" + std::string(::testing::UnitTest::GetInstance()
                                         ->current_test_info()
                                         ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ProvisionWritesFiles) {
  const CliResult r = Rfidlab({"provision", "--n-tags", "5", "--n-readers", "2",
                           "--seed", "3", "--out", P("dir.json"),
                           "--access-list-out", P("acl.json"), "--scheme",
                           "lee-h"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto dir = nlohmann::json::parse(Slurp(P("dir.json")));
  const auto acl = nlohmann::json::parse(Slurp(P("acl.json")));
  EXPECT_EQ(dir["tags"].size(), 5u);
  EXPECT_EQ(acl["scheme"], "lee-h");
  EXPECT_EQ(acl["entries"].size(), 5u);
  const std::string acl_text = Slurp(P("acl.json"));
  for (const auto& t : dir["tags"]) {
    EXPECT_EQ(acl_text.find(t["kt"].get<std::string>()), std::string::npos);
  }
}

TEST_F(CliTest, ProvisionDeterministic) {
  const CliResult a = Rfidlab({"provision", "--n-tags", "4", "--seed", "11"});
  const CliResult b = Rfidlab({"provision", "--n-tags", "4", "--seed", "11"});
  const CliResult c = Rfidlab({"provision", "--n-tags", "4", "--seed", "12"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST_F(CliTest, RunAcceptsAndRejects) {
  for (const char* family : {"tan-auth", "lee-auth", "tan-search", "lee-search"}) {
    for (const char* variant : {"original", "enhanced"}) {
      const CliResult ok = Rfidlab({"run", "--family", family, "--variant", variant,
                                "--seed", "4", "--q", "0.2"});
      EXPECT_EQ(ok.code, kExitOk) << family << ok.err;
      EXPECT_NE(ok.out.find("accepted: true"), std::string::npos);
      const CliResult no = Rfidlab({"run", "--family", family, "--variant", variant,
                                "--seed", "4", "--exclude-tag"});
      EXPECT_EQ(no.code, kExitRejected) << family;
      EXPECT_NE(no.out.find("accepted: false"), std::string::npos);
    }
  }
}

TEST_F(CliTest, RunFromDirectoryThenInspect) {
  ASSERT_EQ(Rfidlab({"provision", "--n-tags", "6", "--out", P("dir.json")}).code,
            kExitOk);
  const CliResult r = Rfidlab({"run", "--dir", P("dir.json"), "--family", "lee-auth",
                           "--tag", "4", "--out", P("t.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto dir = nlohmann::json::parse(Slurp(P("dir.json")));
  EXPECT_NE(r.out.find(dir["tags"][4]["tid"].get<std::string>()),
            std::string::npos);

  const CliResult in = Rfidlab({"inspect", "--in", P("t.json")});
  EXPECT_EQ(in.code, kExitOk) << in.err;
  EXPECT_NE(in.out.find("valid: true"), std::string::npos);

  auto t = nlohmann::json::parse(Slurp(P("t.json")));
  t["messages"][0]["direction"] = "tag-to-reader";
  std::ofstream(P("bad.json")) << t.dump();
  EXPECT_EQ(Rfidlab({"inspect", "--in", P("bad.json")}).code, kExitRejected);
}

TEST_F(CliTest, BenchAuthTable) {
  const CliResult r = Rfidlab({"bench", "auth", "--n", "10", "--trials", "20"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("| Number of hash operations on a tag | 2 | 4 | 3 | 5 |"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("| Number of communication steps | 4 | 4 | 3 | 5 |"),
            std::string::npos);
}

TEST_F(CliTest, BenchSearchCsv) {
  const CliResult r = Rfidlab({"bench", "search", "--n", "10", "20", "--q", "0.1",
                           "0.5", "--trials", "20", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 2 * 2 * 4);
  EXPECT_NE(r.out.find("lee-search,enhanced,20,0.500,20,4,"), std::string::npos)
      << r.out;
}

TEST_F(CliTest, AttackJson) {
  const CliResult r = Rfidlab({"attack", "linkability", "--family", "tan-auth",
                           "--variant", "original", "--trials", "200"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["attack"], "linkability");
  EXPECT_GE(j["advantage"].get<double>(), 0.99);
}

TEST_F(CliTest, EveryCommandIsDeterministic) {
  ASSERT_EQ(Rfidlab({"provision", "--n-tags", "3", "--out", P("d.json")}).code, 0);
  const std::vector<std::vector<std::string>> commands = {
      {"provision", "--n-tags", "7", "--seed", "5"},
      {"run", "--family", "tan-search", "--q", "0.5", "--seed", "5"},
      {"run", "--dir", P("d.json"), "--variant", "enhanced", "--seed", "5"},
      {"attack", "replay", "--family", "lee-auth", "--trials", "20"},
      {"attack", "plaintext-rid", "--trials", "20"},
      {"bench", "search", "--n", "30", "--trials", "30"},
      {"bench", "auth", "--n", "30", "--trials", "30", "--format", "csv"},
  };
  for (const auto& cmd : commands) {
    const CliResult a = Rfidlab(cmd);
    const CliResult b = Rfidlab(cmd);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << cmd[0];
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Rfidlab({}).code, kExitUsage);
  EXPECT_EQ(Rfidlab({"fly"}).code, kExitUsage);
  EXPECT_EQ(Rfidlab({"provision", "--n-tags", "0"}).code, kExitUsage);
  EXPECT_EQ(Rfidlab({"run", "--family", "chun"}).code, kExitUsage);
  EXPECT_EQ(Rfidlab({"run", "--q", "2"}).code, kExitUsage);
  EXPECT_EQ(Rfidlab({"run", "--tag", "99", "--n-tags", "3"}).code, kExitUsage);
  EXPECT_EQ(Rfidlab({"bench", "auth", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(Rfidlab({"attack", "replay", "--variant", "original"}).code, kExitUsage);
  std::ofstream(P("junk.json")) << "{not json";
  EXPECT_EQ(Rfidlab({"inspect", "--in", P("junk.json")}).code, kExitUsage);
}

TEST_F(CliTest, IoErrors) {
  EXPECT_EQ(Rfidlab({"provision", "--n-tags", "2", "--out", P("no/such/dir.json")})
                .code,
            kExitIo);
  EXPECT_EQ(Rfidlab({"inspect", "--in", P("missing.json")}).code, kExitIo);
  EXPECT_EQ(Rfidlab({"run", "--dir", P("missing.json")}).code, kExitIo);
}

}  // namespace
}  // namespace rfidpriv
