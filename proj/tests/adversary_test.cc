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

#include "rfidpriv/adversary.h"

#include "gtest/gtest.h"
#include "test_util.h"

namespace rfidpriv {
namespace {

using testing::AllProtocols;

std::pair<BitString, BitString> TwoReaders(std::uint64_t seed) {
  Rng rng(seed);
  return {rng.Bits(kDefaultBits), rng.Bits(kDefaultBits)};
}

TEST(PlaintextRidTest, OriginalAlwaysLeaks) {
  const auto [rid, other] = TwoReaders(1);
  const std::vector<BitString> known = {other, rid};
  for (const ProtocolId& id : AllProtocols()) {
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Transcript t = RunFreshSession(id, rid, Rng(s)).transcript;
      EXPECT_EQ(DetectPlaintextRid(t, known).success,
                id.variant == Variant::kOriginal)
          << ToString(id);
    }
  }
}

TEST(PlaintextRidTest, UnknownRidNotReported) {
  const auto [rid, other] = TwoReaders(2);
  const std::vector<BitString> known = {other};
  const Transcript t =
      RunFreshSession({Family::kTanAuth, Variant::kOriginal}, rid, Rng(1))
          .transcript;
  EXPECT_FALSE(DetectPlaintextRid(t, known).success);
}

TEST(LinkabilityTest, OriginalLinkableEnhancedNot) {
  const auto [a, b] = TwoReaders(3);
  for (const ProtocolId& id : AllProtocols()) {
    const AttackOutcome out = LinkabilityGame(id, a, b, 400, Rng(4));
    ASSERT_TRUE(out.advantage.has_value());
    if (id.variant == Variant::kOriginal) {
      EXPECT_GE(*out.advantage, 0.99) << ToString(id);
      EXPECT_TRUE(out.success);
    } else {
      EXPECT_LE(*out.advantage, 0.1) << ToString(id);
      EXPECT_FALSE(out.success);
    }
  }
}

TEST(LinkabilityTest, BadArguments) {
  const auto [a, b] = TwoReaders(5);
  const ProtocolId id{Family::kLeeAuth, Variant::kEnhanced};
  EXPECT_THROW(LinkabilityGame(id, a, b, 99, Rng(1)), std::invalid_argument);
  EXPECT_THROW(LinkabilityGame(id, a, a, 200, Rng(1)), std::invalid_argument);
}

TEST(ReplayTest, EnhancedResistsReplay) {
  for (const ProtocolId& id : AllProtocols()) {
    if (id.variant == Variant::kOriginal) continue;
    for (int step = 1; step <= StepCount(id); ++step) {
      for (std::uint64_t s = 0; s < 100; ++s) {
        EXPECT_FALSE(ReplayAttack(id, step, Rng(s)).success)
            << ToString(id) << " step " << step;
      }
    }
  }
}

TEST(ReplayTest, SameSessionControlSucceeds) {
  for (const ProtocolId& id : AllProtocols()) {
    if (id.variant == Variant::kOriginal) continue;
    bool any = false;
    for (int step = 1; step <= StepCount(id); ++step) {
      any = any || ReplayAttack(id, step, Rng(7), /*same_session=*/true).success;
    }
    EXPECT_TRUE(any) << ToString(id);
  }
}

TEST(ReplayTest, BadArguments) {
  EXPECT_THROW(ReplayAttack({Family::kTanAuth, Variant::kOriginal}, 1, Rng(1)),
               std::invalid_argument);
  EXPECT_THROW(ReplayAttack({Family::kTanAuth, Variant::kEnhanced}, 5, Rng(1)),
               std::out_of_range);
  EXPECT_THROW(ReplayAttack({Family::kTanAuth, Variant::kEnhanced}, 0, Rng(1)),
               std::out_of_range);
}

TEST(AttackReportTest, DeterministicJson) {
  const ProtocolId id{Family::kTanSearch, Variant::kEnhanced};
  for (Attack a : {Attack::kPlaintextRid, Attack::kLinkability, Attack::kReplay}) {
    const auto x = AttackReportToJson(RunAttack(a, id, 120, 9));
    const auto y = AttackReportToJson(RunAttack(a, id, 120, 9));
    EXPECT_EQ(x.dump(), y.dump());
    EXPECT_EQ(x["attack"], std::string(AttackName(a)));
    EXPECT_EQ(ParseAttack(AttackName(a)), a);
  }
  EXPECT_THROW(ParseAttack("mitm"), std::invalid_argument);
}

TEST(AttackReportTest, Rates) {
  const ProtocolId orig{Family::kLeeAuth, Variant::kOriginal};
  const ProtocolId enh{Family::kLeeAuth, Variant::kEnhanced};
  EXPECT_EQ(RunAttack(Attack::kPlaintextRid, orig, 100, 1).success_rate, 1.0);
  EXPECT_EQ(RunAttack(Attack::kPlaintextRid, enh, 100, 1).success_rate, 0.0);
  EXPECT_EQ(RunAttack(Attack::kReplay, enh, 100, 1).success_rate, 0.0);
}

}  // namespace
}  // namespace rfidpriv
