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

// Baseline oversamplers: random oversampling, SMOTE and borderline-SMOTE.
//
// Draw-order contract: every generator here draws from
// Rng(DeriveSeed(seed, {streams::kGeneration, 0})). Per synthetic sample,
// SMOTE draws the base index a, then (if it has neighbors) the neighbor slot
// and finally w. With no neighbors only `a` is drawn and the sample is a
// copy, which is exactly the random oversampling law. k-means SMOTE reuses
// the same kernel with stream id = cluster id, so one all-covering cluster
// reproduces SMOTE bit for bit.

#ifndef KMSMOTE_OVERSAMPLERS_H_
#define KMSMOTE_OVERSAMPLERS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kmsmote/data.h"
#include "kmsmote/matrix.h"
#include "kmsmote/neighbors.h"

namespace kmsmote {

// Generated minority rows with provenance. Parent indices are row indices
// of the dataset that was oversampled.
struct SyntheticBatch {
  Matrix samples;
  std::vector<std::pair<std::size_t, std::size_t>> parents;
  std::vector<double> weights;   // interpolation weight w per row
  std::vector<int> cluster_ids;  // -1 outside k-means SMOTE
  std::string method;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;

  std::size_t size() const { return parents.size(); }
};

// a + w (b - a).
std::vector<double> Interpolate(std::span<const double> a,
                                std::span<const double> b, double w);

// majority - minority, or 0 when already balanced.
std::size_t DefaultTargetCount(const Dataset& dataset);

SyntheticBatch RandomOversample(const Dataset& dataset, std::size_t n,
                                std::uint64_t seed);

// knn = 0 degenerates to duplication; kAllNeighbors uses every other
// minority row. knn is clamped to minority - 1.
SyntheticBatch Smote(const Dataset& dataset, std::size_t n, int knn,
                     std::uint64_t seed);

enum class BorderlineVariant { kOne = 1, kTwo = 2 };

enum class BorderCategory { kSafe, kDanger, kNoise };

// Categorizes each minority row (in MinorityIndices order) by the majority
// fraction f among its m nearest neighbors of either class: f == 1 is
// noise, 0.5 <= f < 1 danger, f < 0.5 safe.
std::vector<BorderCategory> CategorizeMinority(const Dataset& dataset,
                                               int m_neighbors);

// Generates only from DANGER rows. Variant 1 pairs them with their knn
// nearest minority rows, w in [0, 1). Variant 2 draws the partner from the
// knn nearest rows of either class; majority partners get w in [0, 0.5).
// With no DANGER rows it falls back to plain SMOTE and records a warning.
SyntheticBatch BorderlineSmote(const Dataset& dataset, std::size_t n, int knn,
                               int m_neighbors, BorderlineVariant variant,
                               std::uint64_t seed);

Dataset AppendBatch(const Dataset& dataset, const SyntheticBatch& batch);

// Samples plus parentA, parentB, w, cluster, method columns.
std::string FormatBatchCsv(const Dataset& dataset, const SyntheticBatch& batch);
void WriteBatchCsv(const Dataset& dataset, const SyntheticBatch& batch,
                   const std::filesystem::path& path);

}  // namespace kmsmote

#endif  // KMSMOTE_OVERSAMPLERS_H_
