// Copyright 2026 The kmsmote Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "kmsmote/error.h"
#include "kmsmote/stats.h"
#include "oracles.h"

namespace kmsmote {
namespace {

TEST(AverageRanksTest, TiesShareTheMeanRank) {
  EXPECT_EQ(AverageRanks(std::vector<double>{0.9, 0.8, 0.8}),
            (std::vector<double>{1.0, 2.5, 2.5}));
  EXPECT_EQ(AverageRanks(std::vector<double>{0.1, 0.5, 0.3}),
            (std::vector<double>{3.0, 1.0, 2.0}));
  EXPECT_EQ(AverageRanks(std::vector<double>{NAN, 0.2, NAN}),
            (std::vector<double>{2.5, 1.0, 2.5}));
}

TEST(MeanRanksTest, DominanceAndFullTie) {
  const std::vector<std::vector<double>> dominance(4, {0.9, 0.1});
  EXPECT_EQ(MeanRanks(dominance), (std::vector<double>{1.0, 2.0}));
  const std::vector<std::vector<double>> tie(3, {0.5, 0.5, 0.5, 0.5});
  EXPECT_EQ(MeanRanks(tie), (std::vector<double>(4, 2.5)));
  EXPECT_THROW(MeanRanks({}), InputError);
  EXPECT_THROW(MeanRanks({{1.0}}), InputError);
}

TEST(FriedmanTest, HandComputedStatistic) {
  const std::vector<std::vector<double>> ranks(4, {1, 2, 3});
  const FriedmanResult r = FriedmanTest(ranks);
  EXPECT_NEAR(r.statistic, 8.0, 1e-12);
  EXPECT_NEAR(r.p_value, oracle::ChiSquaredSurvivalEvenDf(8.0, 2), 1e-6);
  EXPECT_NEAR(r.p_value, 0.018315638888734182, 1e-6);
  EXPECT_TRUE(r.reject);
  EXPECT_FALSE(FriedmanTest(ranks, 0.01).reject);
}

TEST(FriedmanTest, AllTiedAndBlockPermutation) {
  const FriedmanResult tied = FriedmanTest({{2, 2, 2}, {2, 2, 2}});
  EXPECT_EQ(tied.statistic, 0.0);
  EXPECT_EQ(tied.p_value, 1.0);
  EXPECT_FALSE(tied.reject);
  const std::vector<std::vector<double>> a = {
      {1, 2, 3, 4}, {2, 1, 4, 3}, {1, 3, 2, 4}};
  const std::vector<std::vector<double>> b = {a[2], a[0], a[1]};
  EXPECT_EQ(FriedmanTest(a).statistic, FriedmanTest(b).statistic);
}

TEST(FriedmanTest, Preconditions) {
  EXPECT_THROW(FriedmanTest({{1, 2}, {2, 1}}), InputError);
  EXPECT_THROW(FriedmanTest({{1, 2, 3}}), InputError);
  EXPECT_THROW(FriedmanTest({{1, 2, 3}, {1, 2}}), InputError);
}

TEST(ChiSquaredTest, ClosedFormForEvenDf) {
  for (int df = 2; df <= 20; df += 2) {
    for (double x : {0.0, 0.5, 1.0, 3.0, 8.0, 15.0, 40.0}) {
      EXPECT_NEAR(ChiSquaredSurvival(x, df),
                  oracle::ChiSquaredSurvivalEvenDf(x, df), 1e-12)
          << df << " " << x;
    }
  }
}

TEST(ChiSquaredTest, ReferenceValues) {
  // Frozen scipy.stats.chi2.sf values.
  EXPECT_NEAR(ChiSquaredSurvival(3.5, 5), 0.6233876277495822, 1e-12);
  EXPECT_NEAR(ChiSquaredSurvival(20.1, 7), 0.005357687431722464, 1e-12);
  EXPECT_NEAR(ChiSquaredSurvival(0.3, 1), 0.583882420770365, 1e-12);
  EXPECT_NEAR(ChiSquaredSurvival(45, 10) / 2.1747272576671776e-06, 1.0, 1e-9);
  EXPECT_EQ(ChiSquaredSurvival(0.0, 3), 1.0);
}

}  // namespace
}  // namespace kmsmote
