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

#include "kmsmote/neighbors.h"

#include <algorithm>
#include <cmath>

#include "kmsmote/error.h"
#include "kmsmote/parallel.h"

namespace kmsmote {
namespace {

bool Closer(const Neighbor& a, const Neighbor& b) {
  return a.distance < b.distance ||
         (a.distance == b.distance && a.index < b.index);
}

std::size_t Clamp(int knn, std::size_t available) {
  if (knn < 0) throw InputError("knn must be non-negative");
  return std::min(static_cast<std::size_t>(knn), available);
}

void ToEuclidean(std::vector<Neighbor>& list) {
  for (auto& n : list) n.distance = std::sqrt(n.distance);
}

}  // namespace

void NearestInto(const Matrix& points, std::span<const double> query,
                 std::size_t count, std::size_t exclude,
                 std::vector<Neighbor>& out) {
  thread_local std::vector<Neighbor> scratch;
  scratch.clear();
  scratch.reserve(points.rows());
  for (std::size_t i = 0; i < points.rows(); ++i) {
    if (i == exclude) continue;
    scratch.push_back({i, SquaredDistance(query, points.row(i))});
  }
  count = std::min(count, scratch.size());
  if (count < scratch.size()) {
    std::nth_element(scratch.begin(), scratch.begin() + count, scratch.end(),
                     Closer);
  }
  std::sort(scratch.begin(), scratch.begin() + count, Closer);
  out.assign(scratch.begin(), scratch.begin() + count);
}

NeighborTable KnnTable(const Matrix& points, int knn, int workers) {
  if (points.empty()) throw InputError("KnnTable: no points");
  const std::size_t count = Clamp(knn, points.rows() - 1);
  NeighborTable table;
  table.lists.resize(points.rows());
  ParallelFor(points.rows(), workers, [&](std::size_t q) {
    NearestInto(points, points.row(q), count, q, table.lists[q]);
    ToEuclidean(table.lists[q]);
  });
  return table;
}

NeighborTable KnnTable(const Matrix& points, const Matrix& queries, int knn,
                       int workers) {
  if (points.empty()) throw InputError("KnnTable: no points");
  if (queries.cols() != points.cols() && !queries.empty()) {
    throw InputError("KnnTable: query dimension mismatch");
  }
  const std::size_t count = Clamp(knn, points.rows());
  NeighborTable table;
  table.lists.resize(queries.rows());
  ParallelFor(queries.rows(), workers, [&](std::size_t q) {
    NearestInto(points, queries.row(q), count, points.rows(), table.lists[q]);
    ToEuclidean(table.lists[q]);
  });
  return table;
}

}  // namespace kmsmote
