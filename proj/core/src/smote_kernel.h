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

#ifndef KMSMOTE_SRC_SMOTE_KERNEL_H_
#define KMSMOTE_SRC_SMOTE_KERNEL_H_

#include <cstddef>
#include <span>

#include "kmsmote/matrix.h"
#include "kmsmote/oversamplers.h"
#include "kmsmote/random.h"

namespace kmsmote::internal {

// SMOTE over `points`, whose rows are dataset rows `ids`. Appends n samples
// to `out` following the draw-order contract in oversamplers.h.
void GenerateSmote(const Matrix& points, std::span<const std::size_t> ids,
                   std::size_t n, int knn, int cluster_id, Rng& rng,
                   SyntheticBatch& out);

}  // namespace kmsmote::internal

#endif  // KMSMOTE_SRC_SMOTE_KERNEL_H_
