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

#include "kmsmote/kmeans_smote.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "kmsmote/error.h"
#include "kmsmote/random.h"
#include "smote_kernel.h"

namespace kmsmote {
namespace {

constexpr double kMinAverageDistance = 1e-12;

}  // namespace

void KmsParams::Validate() const {
  if (k < 1) throw InputError("k-means SMOTE: k must be >= 1");
  if (!(irt > 0.0)) throw InputError("k-means SMOTE: irt must be > 0");
  if (knn < 0) throw InputError("k-means SMOTE: knn must be >= 0");
  if (de && !(*de >= 0.0 && std::isfinite(*de))) {
    throw InputError("k-means SMOTE: de must be a finite value >= 0");
  }
  if (max_iter < 1) throw InputError("k-means SMOTE: max_iter must be >= 1");
  if (!(tol >= 0.0)) throw InputError("k-means SMOTE: tol must be >= 0");
}

std::vector<FilteredCluster> FilterClusters(const ClusterModel& model,
                                            const Dataset& dataset,
                                            double irt) {
  if (model.assignment.size() != dataset.size()) {
    throw InputError("cluster model was fitted on a different dataset");
  }
  std::vector<FilteredCluster> all(static_cast<std::size_t>(model.k()));
  for (std::size_t c = 0; c < all.size(); ++c) {
    all[c].cluster_id = static_cast<int>(c);
  }
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    auto& cluster = all[static_cast<std::size_t>(model.assignment[i])];
    (dataset.label(i) == kMinority ? cluster.minority_idx
                                   : cluster.majority_idx)
        .push_back(i);
  }
  std::vector<FilteredCluster> kept;
  for (auto& cluster : all) {
    cluster.imbalance_ratio =
        static_cast<double>(cluster.majority_idx.size() + 1) /
        static_cast<double>(cluster.minority_idx.size() + 1);
    // A cluster without minority rows has nothing to interpolate.
    if (cluster.imbalance_ratio < irt && !cluster.minority_idx.empty()) {
      kept.push_back(std::move(cluster));
    }
  }
  return kept;
}

double AverageMinorityDistance(const Matrix& rows) {
  const std::size_t n = rows.rows();
  if (n < 2) throw InputError("average distance needs at least two rows");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      sum += std::sqrt(SquaredDistance(rows.row(i), rows.row(j)));
    }
  }
  // Each unordered pair appears twice among the n(n-1) off-diagonal entries.
  return 2.0 * sum / static_cast<double>(n * (n - 1));
}

std::vector<FilteredCluster> SamplingWeights(
    std::vector<FilteredCluster> clusters, const Dataset& dataset,
    std::optional<double> de) {
  if (clusters.empty()) throw InputError("SamplingWeights: no clusters");
  const double exponent =
      de.value_or(static_cast<double>(dataset.num_features()));

  double distance_sum = 0.0;
  std::size_t measured = 0;
  for (auto& c : clusters) {
    if (c.minority_idx.size() < 2) continue;
    c.avg_minority_distance = AverageMinorityDistance(
        dataset.features().Gather(c.minority_idx));
    distance_sum += c.avg_minority_distance;
    ++measured;
  }
  if (measured == 0) {
    for (auto& c : clusters) {
      c.avg_minority_distance = 0.0;
      c.log_sparsity = 0.0;
      c.sampling_weight = 1.0 / static_cast<double>(clusters.size());
    }
    return clusters;
  }
  const double borrowed = distance_sum / static_cast<double>(measured);
  for (auto& c : clusters) {
    if (c.minority_idx.size() < 2) c.avg_minority_distance = borrowed;
  }

  double max_log = -std::numeric_limits<double>::infinity();
  for (auto& c : clusters) {
    const double distance =
        std::max(c.avg_minority_distance, kMinAverageDistance);
    // de = 0 must give density = count even for tiny distances.
    const double log_power = exponent == 0.0 ? 0.0 : exponent * std::log(distance);
    c.log_sparsity =
        log_power - std::log(static_cast<double>(c.minority_idx.size()));
    max_log = std::max(max_log, c.log_sparsity);
  }
  double total = 0.0;
  for (auto& c : clusters) {
    c.sampling_weight = std::exp(c.log_sparsity - max_log);
    total += c.sampling_weight;
  }
  for (auto& c : clusters) c.sampling_weight /= total;
  return clusters;
}

std::vector<FilteredCluster> AllocateQuotas(
    std::vector<FilteredCluster> clusters, std::size_t n) {
  if (clusters.empty()) return clusters;
  std::vector<double> remainder(clusters.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const double exact = static_cast<double>(n) * clusters[i].sampling_weight;
    const double floor = std::floor(exact);
    clusters[i].quota = static_cast<std::size_t>(floor);
    remainder[i] = exact - floor;
    assigned += clusters[i].quota;
  }
  // Guard against rounding pushing the floors past n.
  while (assigned > n) {
    auto it = std::max_element(
        clusters.begin(), clusters.end(),
        [](const auto& a, const auto& b) { return a.quota < b.quota; });
    --it->quota;
    --assigned;
  }
  std::vector<std::size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (remainder[a] != remainder[b]) return remainder[a] > remainder[b];
    if (clusters[a].sampling_weight != clusters[b].sampling_weight) {
      return clusters[a].sampling_weight > clusters[b].sampling_weight;
    }
    return clusters[a].cluster_id < clusters[b].cluster_id;
  });
  for (std::size_t r = 0; assigned < n; ++r, ++assigned) {
    ++clusters[order[r % order.size()]].quota;
  }
  return clusters;
}

KmsResult KMeansSmote(const Dataset& dataset, const KmsParams& params) {
  params.Validate();
  const std::size_t n = params.n.value_or(DefaultTargetCount(dataset));

  KmsResult result;
  KMeansOptions km;
  km.k = params.k;
  km.max_iter = params.max_iter;
  km.tol = params.tol;
  km.seed = params.seed;
  result.model = FitKMeans(dataset.features(), km);

  auto kept = FilterClusters(result.model, dataset, params.irt);
  if (kept.empty()) {
    std::ostringstream msg;
    msg << "no cluster among k = " << params.k
        << " has an imbalance ratio below irt = " << params.irt
        << "; raise irt or lower k";
    if (!params.fallback_to_smote) throw NoMinorityClusterError(msg.str());
    result.batch = Smote(dataset, n, params.knn, params.seed);
    result.batch.method = "kmeans-smote";
    result.batch.warnings.push_back(msg.str() + " (fell back to SMOTE)");
    result.used_fallback = true;
    return result;
  }
  kept = SamplingWeights(std::move(kept), dataset, params.de);
  result.clusters = AllocateQuotas(std::move(kept), n);

  SyntheticBatch& batch = result.batch;
  batch.samples = Matrix(0, dataset.num_features());
  batch.method = "kmeans-smote";
  batch.seed = params.seed;
  for (const auto& cluster : result.clusters) {
    // Per-cluster substream; output is concatenated in cluster id order.
    Rng rng(DeriveSeed(params.seed,
                       {streams::kGeneration,
                        static_cast<std::uint64_t>(cluster.cluster_id)}));
    internal::GenerateSmote(dataset.features().Gather(cluster.minority_idx),
                            cluster.minority_idx, cluster.quota, params.knn,
                            cluster.cluster_id, rng, batch);
  }
  return result;
}

}  // namespace kmsmote
