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

#ifndef KMSMOTE_KMEANS_H_
#define KMSMOTE_KMEANS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "kmsmote/matrix.h"

namespace kmsmote {

struct KMeansOptions {
  int k = 8;
  int max_iter = 300;
  // Stop once no centroid moves farther than this (Euclidean).
  double tol = 1e-4;
  std::uint64_t seed = 0;
  // Assignment-step threads. The result does not depend on this.
  int workers = 1;
};

struct ClusterModel {
  Matrix centroids;              // k x m
  std::vector<int> assignment;   // per point, in [0, k)
  int iterations = 0;            // Lloyd update steps performed
  double inertia = 0.0;          // sum of squared distances to centroids
  // Inertia after seeding and after every update step; non-increasing.
  std::vector<double> inertia_history;

  int k() const { return static_cast<int>(centroids.rows()); }
};

// Lloyd's algorithm from k-means++ seeding. Converges when no point is
// reassigned, when the largest centroid shift drops below tol, or after
// max_iter updates. A centroid left without points is moved onto the point
// farthest from its own centroid. The returned assignment is always the
// nearest-centroid assignment for the returned centroids.
ClusterModel FitKMeans(const Matrix& points, const KMeansOptions& options);

// Nearest centroid; ties resolve to the lower index.
int PredictCluster(const ClusterModel& model, std::span<const double> x);

}  // namespace kmsmote

#endif  // KMSMOTE_KMEANS_H_
