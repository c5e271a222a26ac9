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

#include "rfidpriv/fleet.h"

#include <set>

#include "gtest/gtest.h"
#include "rfidpriv/crypto.h"
#include "test_util.h"

namespace rfidpriv {
namespace {

TEST(ProvisionTest, DistinctIdentities) {
  Rng rng(1);
  const ProvisionedSystem sys =
      ProvisionSystem({.n_tags = 50, .n_readers = 3, .bits = 64}, rng);
  ASSERT_EQ(sys.directory.tags().size(), 50u);
  ASSERT_EQ(sys.rids.size(), 3u);
  std::set<BitString> ids;
  for (const TagRecord& t : sys.directory.tags()) {
    EXPECT_EQ(t.tid.width(), 64u);
    EXPECT_EQ(t.kt.width(), 64u);
    ids.insert(t.tid);
  }
  for (const BitString& rid : sys.rids) ids.insert(rid);
  EXPECT_EQ(ids.size(), 53u);
  for (const BitString& rid : sys.rids) {
    for (const TagRecord& t : sys.directory.tags()) {
      EXPECT_TRUE(sys.directory.IsAuthorized(rid, t.tid));
    }
  }
}

TEST(ProvisionTest, Deterministic) {
  Rng a(8);
  Rng b(8);
  EXPECT_EQ(DirectoryToJson(ProvisionSystem({.n_tags = 5}, a).directory),
            DirectoryToJson(ProvisionSystem({.n_tags = 5}, b).directory));
}

TEST(ProvisionTest, PartialAuthorization) {
  Rng rng(2);
  const ProvisionedSystem sys = ProvisionSystem(
      {.n_tags = 20, .n_readers = 2, .tags_per_reader = 5}, rng);
  for (const BitString& rid : sys.rids) {
    EXPECT_EQ(DeriveAccessList(sys.directory, rid, CertScheme::kTanF)
                  .entries.size(),
              5u);
  }
}

TEST(ProvisionTest, EmptyFleetRejected) {
  Rng rng(1);
  EXPECT_THROW(ProvisionSystem({.n_tags = 0}, rng), std::invalid_argument);
  EXPECT_THROW(ProvisionSystem({.n_tags = 1, .n_readers = 0}, rng),
               std::invalid_argument);
}

TEST(DirectoryTest, RejectsDuplicateTid) {
  const BitString tid = BitString::FromHex("01");
  EXPECT_THROW(ServerDirectory({{tid, tid}, {tid, tid}}, {}, {}),
               std::invalid_argument);
}

TEST(DirectoryTest, Deauthorize) {
  testing::Fleet f = testing::MakeFleet(4, 3);
  const BitString tid = f.dir.tags()[2].tid;
  f.dir.Deauthorize(f.rid, tid);
  EXPECT_FALSE(f.dir.IsAuthorized(f.rid, tid));
  const AccessList list = DeriveAccessList(f.dir, f.rid, CertScheme::kLeeH);
  EXPECT_EQ(list.entries.size(), 3u);
  EXPECT_FALSE(LookupCert(list, tid).has_value());
}

TEST(CertificationTest, SchemesDiffer) {
  const testing::Fleet f = testing::MakeFleet(1, 4);
  const TagRecord& t = f.dir.tags()[0];
  const BitString tan = Certification(CertScheme::kTanF, f.rid, t.kt);
  const BitString lee = Certification(CertScheme::kLeeH, f.rid, t.kt);
  EXPECT_EQ(tan, HashFields(HashLabel::kF, {f.rid, t.kt}));
  EXPECT_EQ(lee, HashFields(HashLabel::kH, {f.rid, t.kt}));
  EXPECT_NE(tan, lee);
}

TEST(CertificationTest, PerReader) {
  Rng rng(5);
  const ProvisionedSystem sys =
      ProvisionSystem({.n_tags = 1, .n_readers = 2}, rng);
  const BitString& kt = sys.directory.tags()[0].kt;
  EXPECT_NE(Certification(CertScheme::kTanF, sys.rids[0], kt),
            Certification(CertScheme::kTanF, sys.rids[1], kt));
}

TEST(AccessListTest, MatchesDirectory) {
  const testing::Fleet f = testing::MakeFleet(10, 6);
  const AccessList list = DeriveAccessList(f.dir, f.rid, CertScheme::kTanF);
  ASSERT_EQ(list.entries.size(), 10u);
  for (const TagRecord& t : f.dir.tags()) {
    const std::optional<BitString> cert = LookupCert(list, t.tid);
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(*cert, Certification(CertScheme::kTanF, f.rid, t.kt));
  }
  EXPECT_FALSE(LookupCert(list, BitString(128)).has_value());
}

TEST(AccessListTest, UnsupportedScheme) {
  const testing::Fleet f = testing::MakeFleet(2, 6);
  EXPECT_THROW(DeriveAccessList(f.dir, f.rid, CertScheme::kChunEnc),
               UnsupportedSchemeError);
}

TEST(AccessListTest, UnknownReader) {
  const testing::Fleet f = testing::MakeFleet(2, 6);
  EXPECT_THROW(DeriveAccessList(f.dir, BitString(128), CertScheme::kTanF),
               AuthorizationError);
}

TEST(AccessListTest, SerializedFormOmitsTagKeys) {
  const testing::Fleet f = testing::MakeFleet(20, 7);
  for (CertScheme s : {CertScheme::kTanF, CertScheme::kLeeH}) {
    const std::string text =
        AccessListToJson(DeriveAccessList(f.dir, f.rid, s)).dump();
    for (const TagRecord& t : f.dir.tags()) {
      EXPECT_EQ(text.find(t.kt.ToHex()), std::string::npos);
    }
  }
}

TEST(JsonTest, DirectoryRoundTrip) {
  Rng rng(9);
  const ProvisionedSystem sys = ProvisionSystem(
      {.n_tags = 6, .n_readers = 2, .tags_per_reader = 3}, rng);
  const auto j = DirectoryToJson(sys.directory);
  EXPECT_EQ(DirectoryToJson(DirectoryFromJson(nlohmann::json::parse(j.dump()))),
            j);
}

TEST(JsonTest, AccessListRoundTrip) {
  const testing::Fleet f = testing::MakeFleet(3, 10);
  const AccessList list = DeriveAccessList(f.dir, f.rid, CertScheme::kLeeH);
  const AccessList back =
      AccessListFromJson(nlohmann::json::parse(AccessListToJson(list).dump()));
  EXPECT_EQ(back.rid, list.rid);
  EXPECT_EQ(back.scheme, list.scheme);
  ASSERT_EQ(back.entries.size(), list.entries.size());
  EXPECT_EQ(back.entries[1].cert, list.entries[1].cert);
}

TEST(SchemeTest, Names) {
  for (CertScheme s : {CertScheme::kTanF, CertScheme::kLeeH, CertScheme::kChunEnc}) {
    EXPECT_EQ(ParseCertScheme(CertSchemeName(s)), s);
  }
  EXPECT_THROW(ParseCertScheme("rot13"), std::invalid_argument);
}

}  // namespace
}  // namespace rfidpriv
