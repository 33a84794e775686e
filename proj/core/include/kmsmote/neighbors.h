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

#ifndef KMSMOTE_NEIGHBORS_H_
#define KMSMOTE_NEIGHBORS_H_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "kmsmote/matrix.h"

namespace kmsmote {

// "All neighbors": clamps to however many candidates exist.
inline constexpr int kAllNeighbors = std::numeric_limits<int>::max();

struct Neighbor {
  std::size_t index = 0;
  double distance = 0.0;  // Euclidean

  bool operator==(const Neighbor&) const = default;
};

// Per-query neighbor lists ordered by (distance, index).
struct NeighborTable {
  std::vector<std::vector<Neighbor>> lists;

  std::size_t size() const { return lists.size(); }
  const std::vector<Neighbor>& operator[](std::size_t q) const {
    return lists[q];
  }
};

// Exact brute-force search of every point against the others; a point is
// never its own neighbor (duplicates of it are). knn is clamped to n - 1.
NeighborTable KnnTable(const Matrix& points, int knn, int workers = 1);

// Exact search of `queries` against `points`; knn clamped to rows(points).
NeighborTable KnnTable(const Matrix& points, const Matrix& queries, int knn,
                       int workers = 1);

// The `count` nearest points to `query` by (squared distance, index),
// skipping index `exclude` (pass points.rows() to skip nothing). Writes
// squared distances.
void NearestInto(const Matrix& points, std::span<const double> query,
                 std::size_t count, std::size_t exclude,
                 std::vector<Neighbor>& out);

}  // namespace kmsmote

#endif  // KMSMOTE_NEIGHBORS_H_
