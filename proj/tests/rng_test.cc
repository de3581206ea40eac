// Copyright 2026 The batchbandit Authors.
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

#include "batchbandit/rng.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"

namespace batchbandit {
namespace {

std::vector<uint64_t> Draws(RngStream rng, int n) {
  std::vector<uint64_t> out;
  for (int i = 0; i < n; ++i) out.push_back(rng());
  return out;
}

TEST(RngStreamTest, SameSpecGivesSameSequence) {
  EXPECT_EQ(Draws(MakeRngStream(42, 7), 100), Draws(MakeRngStream(42, 7), 100));
}

TEST(RngStreamTest, ReplicationIdsGiveDistinctSequences) {
  const std::vector<uint64_t> a = Draws(MakeRngStream(42, 0), 100);
  const std::vector<uint64_t> b = Draws(MakeRngStream(42, 1), 100);
  for (int i = 0; i < 100; ++i) EXPECT_NE(a[i], b[i]) << "draw " << i;
}

TEST(RngStreamTest, SeedHighBitsMatter) {
  EXPECT_NE(Draws(MakeRngStream(1, 0), 4),
            Draws(MakeRngStream(1 + (uint64_t{1} << 32), 0), 4));
}

TEST(RngStreamTest, UniformInUnitInterval) {
  RngStream rng = MakeRngStream(3, 3);
  double sum = 0.0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / kDraws, 0.5, 0.005);
}

TEST(RngStreamTest, NormalMoments) {
  RngStream rng = MakeRngStream(5, 9);
  double sum = 0.0, sum_sq = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double z = rng.Normal();
    sum += z;
    sum_sq += z * z;
  }
  EXPECT_NEAR(sum / kDraws, 0.0, 0.01);
  EXPECT_NEAR(sum_sq / kDraws, 1.0, 0.02);
}

TEST(HashTest, LabelIsFnv1a) {
  // Reference values of 64-bit FNV-1a.
  EXPECT_EQ(HashLabel(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(HashLabel("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(HashLabel("foobar"), 0x85944171f73967e8ULL);
}

TEST(HashTest, CombineDependsOnValue) {
  const uint64_t h = HashLabel("etc/minimax");
  EXPECT_NE(HashCombine(h, 5000), HashCombine(h, 10000));
  EXPECT_EQ(HashCombine(h, 5000), HashCombine(h, 5000));
}

}  // namespace
}  // namespace batchbandit
