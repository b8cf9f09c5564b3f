// Copyright 2026 The eorder Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eorder/oracle.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "eorder/errors.h"

namespace eorder {
namespace {

std::vector<std::vector<std::size_t>> Ranks(const std::vector<Pattern>& ps) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : ps) out.emplace_back(p.ranks().begin(), p.ranks().end());
  return out;
}

TEST(AllPatternsTest, Examples) {
  EXPECT_EQ(Ranks(AllPatterns(0)), (std::vector<std::vector<std::size_t>>{{}}));
  EXPECT_EQ(Ranks(AllPatterns(2)),
            (std::vector<std::vector<std::size_t>>{{1, 2}, {2, 1}}));
  EXPECT_EQ(Ranks(AllPatterns(3)),
            (std::vector<std::vector<std::size_t>>{
                {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}));
  EXPECT_EQ(AllPatterns(8).size(), 40320u);
  try {
    AllPatterns(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
}

TEST(RunPropertyTest, TransitiveCountsTriples) {
  const auto r = RunProperty("transitive", 3);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.instances, 216u);
}

TEST(RunPropertyTest, NonAntisymmetricReportsWitness) {
  const auto r = RunProperty("non-antisymmetric", 2);
  EXPECT_TRUE(r.pass());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->first, r.witness->second);
  EXPECT_TRUE(EquivEo(r.witness->first, r.witness->second));
  // Lexicographically first distinct equivalent pair over {1..4}.
  EXPECT_EQ(r.witness->first, PrefixListing::Make({1, 2}));
  EXPECT_EQ(r.witness->second, PrefixListing::Make({1, 3}));
}

TEST(RunPropertyTest, NonAntisymmetricHasNoWitnessAtZero) {
  EXPECT_FALSE(RunProperty("non-antisymmetric", 0).pass());
}

TEST(RunPropertyTest, ClassCount) {
  const auto r = RunProperty("class-count", 3);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.counters.at("classes"), 6u);
  EXPECT_EQ(r.counters.at("patterns"), 6u);
}

// Counts frozen from an independent enumeration of the weak order on S_n.
TEST(RunPropertyTest, ReducibleAndChainCounts) {
  EXPECT_EQ(RunProperty("lemma-2-8", 3).counters.at("reducible"), 17u);
  EXPECT_EQ(RunProperty("lemma-2-8", 4).counters.at("reducible"), 151u);
  EXPECT_EQ(RunProperty("subset-characterization", 4).counters.at("reducible"),
            151u);
  EXPECT_EQ(RunProperty("stabilization", 3).instances, 106u);
  EXPECT_EQ(RunProperty("stabilization", 4).instances, 32217u);
}

TEST(RunPropertyTest, EveryPropertyPassesWithinBounds) {
  for (const auto& info : PropertyRegistry()) {
    for (std::size_t n = 1; n <= std::min<std::size_t>(info.max_n, 4); ++n) {
      const auto r = RunProperty(info.id, n);
      EXPECT_TRUE(r.pass()) << info.id << " n=" << n << ": "
                            << (r.violations.empty() ? "" : r.violations[0]);
      EXPECT_GT(r.instances, 0u);
    }
  }
}

TEST(RunPropertyTest, Errors) {
  try {
    RunProperty("bogus", 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownProperty);
  }
  try {
    RunProperty("transitive", 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kTooLarge);
  }
}

TEST(RunPropertyTest, ThreadCountDoesNotChangeReport) {
  for (const char* id : {"transitive", "lemma-2-8", "stabilization", "transport"}) {
    const auto a = RunProperty(id, 4, RunOptions{1});
    const auto b = RunProperty(id, 4, RunOptions{7});
    EXPECT_EQ(a.instances, b.instances) << id;
    EXPECT_EQ(a.violations, b.violations) << id;
    EXPECT_EQ(a.counters, b.counters) << id;
  }
}

TEST(DirectlyReducesTest, Basics) {
  const std::vector<Natural> f = {1, 3, 2}, g = {1, 2, 3}, h = {5, 9, 7};
  EXPECT_FALSE(DirectlyReduces(f, g));
  EXPECT_TRUE(DirectlyReduces(g, f));
  EXPECT_TRUE(DirectlyReduces(f, h));
  EXPECT_FALSE(DirectlyReduces(f, std::vector<Natural>{1, 2}));
}

TEST(ScanForRepeatTest, LeastByLaterIndex) {
  EXPECT_EQ(ScanForRepeat({{2, 1}, {1, 2}}), std::nullopt);
  EXPECT_EQ(ScanForRepeat({{3}, {1}, {1}, {3}}), (PositionPair{2, 3}));
  EXPECT_EQ(ScanForRepeat({{3}, {1}, {3}, {1}}), (PositionPair{1, 3}));
}

}  // namespace
}  // namespace eorder
