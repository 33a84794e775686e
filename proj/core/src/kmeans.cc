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

#include "kmsmote/kmeans.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kmsmote/error.h"
#include "kmsmote/parallel.h"
#include "kmsmote/random.h"

namespace kmsmote {
namespace {

// Chunking is fixed so partial sums combine in the same order for any
// number of workers.
constexpr std::size_t kChunk = 512;

int Nearest(const Matrix& centroids, std::span<const double> x, double* d2) {
  int best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < centroids.rows(); ++c) {
    const double d = SquaredDistance(x, centroids.row(c));
    if (d < best_d2) {
      best_d2 = d;
      best = static_cast<int>(c);
    }
  }
  if (d2 != nullptr) *d2 = best_d2;
  return best;
}

struct AssignResult {
  std::size_t changed = 0;
  double inertia = 0.0;
};

AssignResult Assign(const Matrix& points, const Matrix& centroids,
                    std::vector<int>& assignment, std::vector<double>& d2,
                    int workers) {
  const std::size_t n = points.rows();
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<AssignResult> partial(chunks);
  ParallelFor(chunks, workers, [&](std::size_t c) {
    AssignResult& r = partial[c];
    const std::size_t end = std::min(n, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const int best = Nearest(centroids, points.row(i), &d2[i]);
      r.changed += (best != assignment[i]);
      assignment[i] = best;
      r.inertia += d2[i];
    }
  });
  AssignResult total;
  for (const auto& r : partial) {
    total.changed += r.changed;
    total.inertia += r.inertia;
  }
  return total;
}

Matrix SeedPlusPlus(const Matrix& points, int k, Rng& rng) {
  const std::size_t n = points.rows();
  Matrix centroids(static_cast<std::size_t>(k), points.cols());
  auto place = [&](int c, std::size_t idx) {
    const auto src = points.row(idx);
    std::copy(src.begin(), src.end(), centroids.row(c).begin());
  };
  place(0, rng.UniformIndex(n));
  std::vector<double> min_d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    min_d2[i] = SquaredDistance(points.row(i), centroids.row(0));
  }
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (double d : min_d2) total += d;
    std::size_t chosen = 0;
    if (total > 0.0) {
      const double target = rng.NextUnit() * total;
      double cumulative = 0.0;
      std::size_t last_positive = 0;
      bool found = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (min_d2[i] <= 0.0) continue;
        last_positive = i;
        cumulative += min_d2[i];
        if (cumulative > target) {
          chosen = i;
          found = true;
          break;
        }
      }
      if (!found) chosen = last_positive;
    } else {
      // Every point coincides with a chosen centre.
      chosen = rng.UniformIndex(n);
    }
    place(c, chosen);
    for (std::size_t i = 0; i < n; ++i) {
      min_d2[i] = std::min(min_d2[i],
                           SquaredDistance(points.row(i), centroids.row(c)));
    }
  }
  return centroids;
}

// Returns the largest centroid displacement.
double UpdateCentroids(const Matrix& points, const std::vector<int>& assignment,
                       std::vector<double>& d2, Matrix& centroids) {
  const std::size_t k = centroids.rows();
  const std::size_t m = points.cols();
  Matrix sums(k, m);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    const auto c = static_cast<std::size_t>(assignment[i]);
    ++counts[c];
    auto dst = sums.row(c);
    const auto src = points.row(i);
    for (std::size_t j = 0; j < m; ++j) dst[j] += src[j];
  }
  Matrix updated(k, m);
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] == 0) continue;
    const double inv = 1.0 / static_cast<double>(counts[c]);
    for (std::size_t j = 0; j < m; ++j) updated(c, j) = sums(c, j) * inv;
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] != 0) continue;
    // Empty: move onto the worst-fitting point not already used.
    std::size_t far = 0;
    double far_d2 = -1.0;
    for (std::size_t i = 0; i < points.rows(); ++i) {
      if (d2[i] > far_d2) {
        far_d2 = d2[i];
        far = i;
      }
    }
    d2[far] = -1.0;
    const auto src = points.row(far);
    std::copy(src.begin(), src.end(), updated.row(c).begin());
  }
  double shift = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    shift = std::max(shift, SquaredDistance(updated.row(c), centroids.row(c)));
  }
  centroids = std::move(updated);
  return std::sqrt(shift);
}

}  // namespace

ClusterModel FitKMeans(const Matrix& points, const KMeansOptions& options) {
  if (points.empty()) throw InputError("k-means needs at least one point");
  if (options.k < 1 || static_cast<std::size_t>(options.k) > points.rows()) {
    throw InputError("k-means: k = " + std::to_string(options.k) +
                     " must be in [1, " + std::to_string(points.rows()) + "]");
  }
  if (options.max_iter < 1) throw InputError("k-means: max_iter must be >= 1");
  if (!(options.tol >= 0.0)) throw InputError("k-means: tol must be >= 0");

  Rng rng(DeriveSeed(options.seed, {streams::kClustering}));
  ClusterModel model;
  model.centroids = SeedPlusPlus(points, options.k, rng);
  model.assignment.assign(points.rows(), -1);
  std::vector<double> d2(points.rows());
  AssignResult step =
      Assign(points, model.centroids, model.assignment, d2, options.workers);
  model.inertia_history.push_back(step.inertia);

  for (int it = 0; it < options.max_iter; ++it) {
    const double shift =
        UpdateCentroids(points, model.assignment, d2, model.centroids);
    step = Assign(points, model.centroids, model.assignment, d2,
                  options.workers);
    ++model.iterations;
    model.inertia_history.push_back(step.inertia);
    if (step.changed == 0 || shift < options.tol) break;
  }
  model.inertia = step.inertia;
  return model;
}

int PredictCluster(const ClusterModel& model, std::span<const double> x) {
  if (x.size() != model.centroids.cols()) {
    throw InputError("PredictCluster: expected " +
                     std::to_string(model.centroids.cols()) +
                     " features, got " + std::to_string(x.size()));
  }
  return Nearest(model.centroids, x, nullptr);
}

}  // namespace kmsmote
