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

#include "kmsmote/oversamplers.h"

#include <algorithm>
#include <string>

#include "kmsmote/error.h"
#include "kmsmote/io.h"
#include "kmsmote/random.h"
#include "smote_kernel.h"

namespace kmsmote {

std::vector<double> Interpolate(std::span<const double> a,
                                std::span<const double> b, double w) {
  if (a.size() != b.size()) throw InputError("Interpolate: dimension mismatch");
  std::vector<double> x(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) x[j] = a[j] + w * (b[j] - a[j]);
  return x;
}

std::size_t DefaultTargetCount(const Dataset& dataset) {
  const auto s = dataset.stats();
  return s.majority_count > s.minority_count
             ? s.majority_count - s.minority_count
             : 0;
}

namespace internal {

void GenerateSmote(const Matrix& points, std::span<const std::size_t> ids,
                   std::size_t n, int knn, int cluster_id, Rng& rng,
                   SyntheticBatch& out) {
  if (n == 0) return;
  if (points.empty()) throw InputError("SMOTE: no minority rows to sample");
  if (knn < 0) throw InputError("SMOTE: knn must be non-negative");
  const std::size_t k_eff =
      std::min(static_cast<std::size_t>(knn), points.rows() - 1);
  NeighborTable table;
  if (k_eff > 0) table = KnnTable(points, static_cast<int>(k_eff));

  out.samples.Reserve(out.samples.rows() + n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t a = rng.UniformIndex(points.rows());
    if (k_eff == 0) {
      out.samples.AppendRow(points.row(a));
      out.parents.emplace_back(ids[a], ids[a]);
      out.weights.push_back(0.0);
    } else {
      const std::size_t b = table[a][rng.UniformIndex(k_eff)].index;
      const double w = rng.NextUnit();
      out.samples.AppendRow(Interpolate(points.row(a), points.row(b), w));
      out.parents.emplace_back(ids[a], ids[b]);
      out.weights.push_back(w);
    }
    out.cluster_ids.push_back(cluster_id);
  }
}

}  // namespace internal

namespace {

SyntheticBatch EmptyBatch(const Dataset& dataset, std::string method,
                          std::uint64_t seed) {
  SyntheticBatch batch;
  batch.samples = Matrix(0, dataset.num_features());
  batch.method = std::move(method);
  batch.seed = seed;
  return batch;
}

Rng GenerationRng(std::uint64_t seed) {
  return Rng(DeriveSeed(seed, {streams::kGeneration, 0}));
}

}  // namespace

SyntheticBatch RandomOversample(const Dataset& dataset, std::size_t n,
                                std::uint64_t seed) {
  SyntheticBatch batch = EmptyBatch(dataset, "random", seed);
  const auto ids = dataset.MinorityIndices();
  Rng rng = GenerationRng(seed);
  internal::GenerateSmote(dataset.features().Gather(ids), ids, n, 0, -1, rng,
                          batch);
  return batch;
}

SyntheticBatch Smote(const Dataset& dataset, std::size_t n, int knn,
                     std::uint64_t seed) {
  SyntheticBatch batch = EmptyBatch(dataset, "smote", seed);
  if (knn > 0 && dataset.minority_count() < 2) {
    throw InputError("SMOTE needs at least two minority rows");
  }
  const auto ids = dataset.MinorityIndices();
  Rng rng = GenerationRng(seed);
  internal::GenerateSmote(dataset.features().Gather(ids), ids, n, knn, -1, rng,
                          batch);
  return batch;
}

std::vector<BorderCategory> CategorizeMinority(const Dataset& dataset,
                                               int m_neighbors) {
  if (m_neighbors < 1) throw InputError("borderline: m_neighbors must be >= 1");
  const auto ids = dataset.MinorityIndices();
  const std::size_t count =
      std::min(static_cast<std::size_t>(m_neighbors), dataset.size() - 1);
  std::vector<BorderCategory> categories;
  categories.reserve(ids.size());
  std::vector<Neighbor> neighbors;
  for (std::size_t id : ids) {
    NearestInto(dataset.features(), dataset.row(id), count, id, neighbors);
    std::size_t majority = 0;
    for (const auto& nb : neighbors) majority += dataset.label(nb.index) == kMajority;
    // Compare counts to avoid rounding: f = majority / count.
    if (majority == count) {
      categories.push_back(BorderCategory::kNoise);
    } else if (2 * majority >= count) {
      categories.push_back(BorderCategory::kDanger);
    } else {
      categories.push_back(BorderCategory::kSafe);
    }
  }
  return categories;
}

SyntheticBatch BorderlineSmote(const Dataset& dataset, std::size_t n, int knn,
                               int m_neighbors, BorderlineVariant variant,
                               std::uint64_t seed) {
  const std::string method =
      variant == BorderlineVariant::kOne ? "borderline1" : "borderline2";
  if (dataset.minority_count() < 2) {
    throw InputError(method + " needs at least two minority rows");
  }
  if (knn < 1) throw InputError(method + ": knn must be >= 1");
  SyntheticBatch batch = EmptyBatch(dataset, method, seed);
  if (n == 0) return batch;

  const auto ids = dataset.MinorityIndices();
  const auto categories = CategorizeMinority(dataset, m_neighbors);
  std::vector<std::size_t> danger;  // positions within ids
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (categories[i] == BorderCategory::kDanger) danger.push_back(i);
  }
  if (danger.empty()) {
    batch = Smote(dataset, n, knn, seed);
    batch.method = method;
    batch.warnings.push_back(method +
                             ": no borderline (DANGER) minority rows; fell "
                             "back to plain SMOTE");
    return batch;
  }

  Rng rng = GenerationRng(seed);
  const Matrix minority = dataset.features().Gather(ids);
  std::vector<Neighbor> neighbors;
  batch.samples.Reserve(n);
  // Neighbor lists are computed once per DANGER row, on first use.
  std::vector<std::vector<Neighbor>> cache(danger.size());
  std::vector<bool> cached(danger.size(), false);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t d = rng.UniformIndex(danger.size());
    const std::size_t a_pos = danger[d];
    const std::size_t a = ids[a_pos];
    if (!cached[d]) {
      if (variant == BorderlineVariant::kOne) {
        NearestInto(minority, minority.row(a_pos),
                    std::min<std::size_t>(knn, ids.size() - 1), a_pos,
                    cache[d]);
        for (auto& nb : cache[d]) nb.index = ids[nb.index];
      } else {
        NearestInto(dataset.features(), dataset.row(a),
                    std::min<std::size_t>(knn, dataset.size() - 1), a,
                    cache[d]);
      }
      cached[d] = true;
    }
    const auto& list = cache[d];
    const std::size_t b = list[rng.UniformIndex(list.size())].index;
    const double scale = dataset.label(b) == kMajority ? 0.5 : 1.0;
    const double w = rng.NextUnit() * scale;
    batch.samples.AppendRow(Interpolate(dataset.row(a), dataset.row(b), w));
    batch.parents.emplace_back(a, b);
    batch.weights.push_back(w);
    batch.cluster_ids.push_back(-1);
  }
  return batch;
}

Dataset AppendBatch(const Dataset& dataset, const SyntheticBatch& batch) {
  return dataset.WithMinorityRows(batch.samples);
}

std::string FormatBatchCsv(const Dataset& dataset,
                           const SyntheticBatch& batch) {
  std::string out;
  for (std::size_t j = 0; j < dataset.num_features(); ++j) {
    out += dataset.feature_names().empty() ? "x" + std::to_string(j)
                                           : dataset.feature_names()[j];
    out += ',';
  }
  out += "parentA,parentB,w,cluster,method\n";
  for (std::size_t i = 0; i < batch.size(); ++i) {
    for (double v : batch.samples.row(i)) {
      out += FormatDouble(v);
      out += ',';
    }
    out += std::to_string(batch.parents[i].first) + ',' +
           std::to_string(batch.parents[i].second) + ',' +
           FormatDouble(batch.weights[i]) + ',' +
           std::to_string(batch.cluster_ids[i]) + ',' + batch.method + '\n';
  }
  return out;
}

void WriteBatchCsv(const Dataset& dataset, const SyntheticBatch& batch,
                   const std::filesystem::path& path) {
  WriteFileAtomic(path, FormatBatchCsv(dataset, batch));
}

}  // namespace kmsmote
