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

// k-means SMOTE: cluster the whole input space, keep minority-dominated
// clusters, split the synthetic budget by minority sparsity, then run SMOTE
// inside each kept cluster.
//
// With k = 1 and irt = +inf the single cluster holds every row and the
// output equals Smote(dataset, n, knn, seed) bit for bit; with knn = 0 it
// equals RandomOversample.

#ifndef KMSMOTE_KMEANS_SMOTE_H_
#define KMSMOTE_KMEANS_SMOTE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "kmsmote/data.h"
#include "kmsmote/kmeans.h"
#include "kmsmote/oversamplers.h"

namespace kmsmote {

inline constexpr double kInfiniteIrt = std::numeric_limits<double>::infinity();

struct KmsParams {
  int k = 2;
  // Imbalance ratio threshold; a cluster is kept iff its ratio is < irt.
  double irt = 1.0;
  // SMOTE neighbors inside a cluster; 0 duplicates, kAllNeighbors for all.
  int knn = 5;
  // Density exponent; nullopt means the number of features.
  std::optional<double> de;
  // Samples to generate; nullopt means majority - minority.
  std::optional<std::size_t> n;
  std::uint64_t seed = 0;
  // When no cluster passes the filter: plain SMOTE instead of an error.
  bool fallback_to_smote = false;
  int max_iter = 300;
  double tol = 1e-4;

  // Throws InputError when a field is out of range.
  void Validate() const;
};

struct FilteredCluster {
  int cluster_id = 0;
  std::vector<std::size_t> minority_idx;  // dataset rows, ascending
  std::vector<std::size_t> majority_idx;
  // (majority + 1) / (minority + 1).
  double imbalance_ratio = 0.0;
  double avg_minority_distance = 0.0;
  // de * log(avg distance) - log(minority count). The linear sparsity factor
  // overflows for large de, so weights are normalized in log space.
  double log_sparsity = 0.0;
  double sampling_weight = 0.0;
  std::size_t quota = 0;
};

// Keeps clusters whose imbalance ratio is strictly below irt and that have
// at least one minority member, ordered by cluster id. May be empty.
std::vector<FilteredCluster> FilterClusters(const ClusterModel& model,
                                            const Dataset& dataset,
                                            double irt);

// Mean pairwise Euclidean distance over the rows, excluding the diagonal.
// Needs at least two rows.
double AverageMinorityDistance(const Matrix& rows);

// Fills avg_minority_distance, log_sparsity and sampling_weight.
//   density  = minority count / avg distance^de
//   sparsity = 1 / density, weight = sparsity / sum of sparsities
// A single-minority cluster borrows the mean distance of the other
// clusters (uniform weights if none has two members). A zero distance is
// replaced by 1e-12. de = nullopt uses the feature count.
std::vector<FilteredCluster> SamplingWeights(
    std::vector<FilteredCluster> clusters, const Dataset& dataset,
    std::optional<double> de);

// Largest-remainder split of n: floors of n * weight, then one extra unit
// per cluster by descending remainder, ties to the sparser (higher weight)
// cluster and then to the lower cluster id. The quotas sum to n.
std::vector<FilteredCluster> AllocateQuotas(
    std::vector<FilteredCluster> clusters, std::size_t n);

struct KmsResult {
  SyntheticBatch batch;
  ClusterModel model;
  std::vector<FilteredCluster> clusters;  // kept clusters with quotas
  bool used_fallback = false;
};

// Throws NoMinorityClusterError when no cluster passes the filter, unless
// params.fallback_to_smote is set.
KmsResult KMeansSmote(const Dataset& dataset, const KmsParams& params);

}  // namespace kmsmote

#endif  // KMSMOTE_KMEANS_SMOTE_H_
