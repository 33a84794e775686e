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

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "fixtures.h"
#include "kmsmote/data.h"
#include "kmsmote/error.h"
#include "kmsmote/oversamplers.h"
#include "kmsmote/stats.h"
#include "oracles.h"

namespace kmsmote {
namespace {

// Coordinate-wise x == a + w (b - a), relative tolerance 1e-9.
void ExpectOnSegments(const Dataset& d, const SyntheticBatch& batch) {
  ASSERT_EQ(batch.samples.rows(), batch.size());
  ASSERT_EQ(batch.weights.size(), batch.size());
  ASSERT_EQ(batch.cluster_ids.size(), batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const auto [a, b] = batch.parents[i];
    ASSERT_EQ(d.label(a), kMinority);
    const double w = batch.weights[i];
    ASSERT_GE(w, 0.0);
    ASSERT_LE(w, 1.0);
    for (std::size_t j = 0; j < d.num_features(); ++j) {
      const double expected = d.row(a)[j] + w * (d.row(b)[j] - d.row(a)[j]);
      const double scale = std::max({1.0, std::abs(d.row(a)[j]),
                                     std::abs(d.row(b)[j])});
      ASSERT_NEAR(batch.samples(i, j), expected, 1e-9 * scale);
      ASSERT_GE(batch.samples(i, j),
                std::min(d.row(a)[j], d.row(b)[j]) - 1e-9 * scale);
      ASSERT_LE(batch.samples(i, j),
                std::max(d.row(a)[j], d.row(b)[j]) + 1e-9 * scale);
    }
  }
}

// Majority at 0..4; minority at 2.1 (noise), 4.3 (danger), and safe points
// 5.0, 5.7, 6.4, 7.1, 7.8 (for m = 3).
Dataset BorderFixture() {
  Matrix x;
  std::vector<int> y;
  for (double v : {0.0, 1.0, 2.0, 3.0, 4.0}) {
    x.AppendRow(std::vector<double>{v});
    y.push_back(kMajority);
  }
  for (double v : {2.1, 4.3, 5.0, 5.7, 6.4, 7.1, 7.8}) {
    x.AppendRow(std::vector<double>{v});
    y.push_back(kMinority);
  }
  return Dataset(std::move(x), std::move(y), "border");
}

constexpr std::size_t kNoiseRow = 5;
constexpr std::size_t kDangerRow = 6;

TEST(InterpolateTest, HandValues) {
  const std::vector<double> a = {0, 0}, b = {2, 2};
  EXPECT_EQ(Interpolate(a, b, 0.5), (std::vector<double>{1, 1}));
  EXPECT_EQ(Interpolate(a, b, 0.0), a);
  EXPECT_EQ(Interpolate(a, b, 1.0), b);
  const std::vector<double> c = {1, -1}, e = {4, 5};
  const auto x = Interpolate(c, e, 1.0 / 3.0);
  EXPECT_NEAR(x[0], 2.0, 1e-15);
  EXPECT_NEAR(x[1], 1.0, 1e-15);
  const std::vector<double> short_vec = {1};
  EXPECT_THROW(Interpolate(a, short_vec, 0.5), InputError);
}

TEST(RandomOversampleTest, CopiesOfMinorityRows) {
  const Dataset d = fixtures::Ecoli();
  EXPECT_EQ(RandomOversample(d, 0, 1).size(), 0u);
  const SyntheticBatch batch = RandomOversample(d, DefaultTargetCount(d), 1);
  EXPECT_EQ(batch.size(), 232u);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const auto [a, b] = batch.parents[i];
    EXPECT_EQ(a, b);
    EXPECT_EQ(d.label(a), kMinority);
    EXPECT_TRUE(std::ranges::equal(batch.samples.row(i), d.row(a)));
  }
  const Dataset balanced = AppendBatch(d, batch);
  EXPECT_EQ(balanced.stats().imbalance_ratio, 1.0);
}

TEST(SmoteTest, TwoPointMinorityStaysOnSegment) {
  Matrix x = Matrix::FromRows({{0, 0}, {5, 5}, {9, 9}, {1, 3}, {4, -2}});
  const Dataset d(x, {0, 0, 0, 1, 1});
  const SyntheticBatch batch = Smote(d, 50, 1, 2);
  ExpectOnSegments(d, batch);
  for (const auto& [a, b] : batch.parents) {
    EXPECT_NE(a, b);
    EXPECT_TRUE(a == 3 || a == 4);
  }
}

TEST(SmoteTest, KnnZeroEqualsRandomOversampling) {
  const Dataset d = fixtures::Ecoli();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SyntheticBatch s = Smote(d, 100, 0, seed);
    const SyntheticBatch r = RandomOversample(d, 100, seed);
    EXPECT_EQ(s.samples, r.samples);
    EXPECT_EQ(s.parents, r.parents);
  }
}

TEST(SmoteTest, ParentPairLawIsUniform) {
  // a uniform over 6 minority rows, b uniform over a's 2 nearest: 12 cells.
  const Dataset d = MakeBlobs(6, 20, 2, 0.5, 4);
  const auto minority = d.MinorityIndices();
  std::map<std::pair<std::size_t, std::size_t>, int> expected_cells;
  for (std::size_t a : minority) {
    std::vector<std::pair<double, std::size_t>> dist;
    for (std::size_t b : minority) {
      if (b != a) dist.emplace_back(oracle::Distance(d.row(a), d.row(b)), b);
    }
    std::sort(dist.begin(), dist.end());
    expected_cells[{a, dist[0].second}] = 0;
    expected_cells[{a, dist[1].second}] = 0;
  }
  ASSERT_EQ(expected_cells.size(), 12u);
  const int draws = 10000;
  const SyntheticBatch batch = Smote(d, draws, 2, 123);
  for (const auto& p : batch.parents) {
    auto it = expected_cells.find(p);
    ASSERT_NE(it, expected_cells.end());
    ++it->second;
  }
  double chi2 = 0.0;
  const double e = draws / 12.0;
  for (const auto& [cell, count] : expected_cells) {
    chi2 += (count - e) * (count - e) / e;
  }
  EXPECT_GT(ChiSquaredSurvival(chi2, 11), 0.01) << chi2;
}

TEST(SmoteTest, PropertiesAcrossSeeds) {
  const Dataset d = MakeBlobs(30, 90, 3, 1.0, 6);
  std::vector<double> lo(3, INFINITY), hi(3, -INFINITY);
  for (std::size_t r : d.MinorityIndices()) {
    for (std::size_t j = 0; j < 3; ++j) {
      lo[j] = std::min(lo[j], d.row(r)[j]);
      hi[j] = std::max(hi[j], d.row(r)[j]);
    }
  }
  for (int knn : {1, 5, kAllNeighbors}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SyntheticBatch batch = Smote(d, DefaultTargetCount(d), knn, seed);
      ExpectOnSegments(d, batch);
      for (std::size_t i = 0; i < batch.size(); ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          EXPECT_GE(batch.samples(i, j), lo[j]);
          EXPECT_LE(batch.samples(i, j), hi[j]);
        }
      }
      EXPECT_EQ(AppendBatch(d, batch).stats().imbalance_ratio, 1.0);
      const SyntheticBatch again = Smote(d, DefaultTargetCount(d), knn, seed);
      EXPECT_EQ(batch.samples, again.samples);
      EXPECT_EQ(batch.parents, again.parents);
    }
  }
}

TEST(SmoteTest, RequiresTwoMinorityRows) {
  const Dataset d(Matrix::FromRows({{0}, {1}, {2}}), {0, 0, 1});
  EXPECT_THROW(Smote(d, 3, 5, 0), InputError);
  EXPECT_EQ(Smote(d, 3, 0, 0).size(), 3u);
}

TEST(BorderlineTest, Categories) {
  const Dataset d = BorderFixture();
  const auto categories = CategorizeMinority(d, 3);
  ASSERT_EQ(categories.size(), 7u);
  EXPECT_EQ(categories[0], BorderCategory::kNoise);
  EXPECT_EQ(categories[1], BorderCategory::kDanger);
  for (std::size_t i = 2; i < 7; ++i) {
    EXPECT_EQ(categories[i], BorderCategory::kSafe) << i;
  }
}

TEST(BorderlineTest, VariantOneUsesOnlyDangerRows) {
  const Dataset d = BorderFixture();
  const SyntheticBatch batch =
      BorderlineSmote(d, 200, 2, 3, BorderlineVariant::kOne, 5);
  ASSERT_EQ(batch.size(), 200u);
  ExpectOnSegments(d, batch);
  for (const auto& [a, b] : batch.parents) {
    EXPECT_EQ(a, kDangerRow);
    EXPECT_EQ(d.label(b), kMinority);
    EXPECT_NE(b, kNoiseRow);
  }
  EXPECT_TRUE(batch.warnings.empty());
}

TEST(BorderlineTest, VariantTwoMajorityPartnersStayNearMinority) {
  const Dataset d = BorderFixture();
  const SyntheticBatch batch =
      BorderlineSmote(d, 400, 2, 3, BorderlineVariant::kTwo, 5);
  ExpectOnSegments(d, batch);
  int majority_partners = 0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const auto [a, b] = batch.parents[i];
    EXPECT_EQ(a, kDangerRow);
    if (d.label(b) != kMajority) continue;
    ++majority_partners;
    EXPECT_LT(batch.weights[i], 0.5);
    EXPECT_LT(oracle::Distance(batch.samples.row(i), d.row(a)),
              oracle::Distance(batch.samples.row(i), d.row(b)));
  }
  EXPECT_GT(majority_partners, 100);
}

TEST(BorderlineTest, NoDangerFallsBackToSmoteWithWarning) {
  const Dataset d = MakeBlobs(20, 40, 2, 30.0, 1);
  const SyntheticBatch batch =
      BorderlineSmote(d, 20, 5, 5, BorderlineVariant::kOne, 3);
  ASSERT_EQ(batch.warnings.size(), 1u);
  EXPECT_EQ(batch.samples, Smote(d, 20, 5, 3).samples);
  EXPECT_EQ(batch.method, "borderline1");
}

TEST(BorderlineTest, Errors) {
  const Dataset d = BorderFixture();
  EXPECT_THROW(BorderlineSmote(d, 5, 0, 3, BorderlineVariant::kOne, 0),
               InputError);
  EXPECT_THROW(BorderlineSmote(d, 5, 2, 0, BorderlineVariant::kOne, 0),
               InputError);
}

TEST(BatchCsvTest, ProvenanceColumns) {
  const Dataset d(Matrix::FromRows({{0, 0}, {2, 4}, {4, 8}, {9, 9}}),
                  {1, 1, 0, 0}, "t", {"u", "v"});
  SyntheticBatch batch;
  batch.samples = Matrix::FromRows({{1, 2}});
  batch.parents = {{0, 1}};
  batch.weights = {0.5};
  batch.cluster_ids = {-1};
  batch.method = "smote";
  EXPECT_EQ(FormatBatchCsv(d, batch),
            "u,v,parentA,parentB,w,cluster,method\n1,2,0,1,0.5,-1,smote\n");
}

}  // namespace
}  // namespace kmsmote
