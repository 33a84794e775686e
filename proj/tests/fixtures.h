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


// Small constructed datasets shared by unit and acceptance tests.

#ifndef KMSMOTE_TESTS_FIXTURES_H_
#define KMSMOTE_TESTS_FIXTURES_H_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "kmsmote/data.h"
#include "kmsmote/matrix.h"
#include "kmsmote/random.h"

namespace kmsmote::fixtures {

inline std::string DataPath(const std::string& file) {
  return std::string(KMSMOTE_DATA_DIR) + "/uci/" + file;
}

inline Dataset Ecoli() { return LoadCsv(DataPath("ecoli.csv")); }

// One minority outlier at the center of a 200-point majority blob, plus a
// 30-point minority blob far away. The outlier is the last row.
inline Dataset PlantedOutlier(std::uint64_t seed = 11) {
  Rng rng(seed);
  Matrix x;
  std::vector<int> y;
  for (int i = 0; i < 200; ++i) {
    x.AppendRow(std::vector<double>{rng.NextNormal(), rng.NextNormal()});
    y.push_back(kMajority);
  }
  for (int i = 0; i < 30; ++i) {
    x.AppendRow(std::vector<double>{12.0 + rng.NextNormal(),
                                    12.0 + rng.NextNormal()});
    y.push_back(kMinority);
  }
  x.AppendRow(std::vector<double>{0.05, -0.05});
  y.push_back(kMinority);
  return Dataset(std::move(x), std::move(y), "planted");
}

inline constexpr std::size_t kPlantedOutlierRow = 230;

// Two minority blobs of 8 points each, the second a copy of the first
// scaled by 3 (so its mean pairwise distance is exactly 3x), and a
// 30-point majority group far from both. The shapes are rotated by a
// seed-dependent angle.
struct TwoBlob {
  Dataset dataset;
  std::vector<std::size_t> dense_rows;
  std::vector<std::size_t> sparse_rows;
};

inline TwoBlob MakeTwoBlob(std::uint64_t seed) {
  Rng rng(seed);
  const double angle = 2.0 * std::numbers::pi * rng.NextUnit();
  std::vector<std::vector<double>> shape;
  for (int i = 0; i < 8; ++i) {
    const double a = angle + 2.0 * std::numbers::pi * i / 8.0;
    const double r = 1.0 + 0.25 * (i % 3);
    shape.push_back({r * std::cos(a), r * std::sin(a)});
  }
  TwoBlob out{Dataset(Matrix(2, 1), {0, 1}), {}, {}};
  Matrix x;
  std::vector<int> y;
  for (const auto& p : shape) {
    out.dense_rows.push_back(y.size());
    x.AppendRow(std::vector<double>{p[0], p[1]});
    y.push_back(kMinority);
  }
  for (const auto& p : shape) {
    out.sparse_rows.push_back(y.size());
    x.AppendRow(std::vector<double>{60.0 + 3.0 * p[0], 3.0 * p[1]});
    y.push_back(kMinority);
  }
  for (int i = 0; i < 30; ++i) {
    x.AppendRow(std::vector<double>{30.0 + 0.5 * rng.NextNormal(),
                                    60.0 + 0.5 * rng.NextNormal()});
    y.push_back(kMajority);
  }
  out.dataset = Dataset(std::move(x), std::move(y), "two_blob");
  return out;
}

}  // namespace kmsmote::fixtures

#endif  // KMSMOTE_TESTS_FIXTURES_H_
