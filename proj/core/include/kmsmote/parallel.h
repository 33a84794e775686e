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

#ifndef KMSMOTE_PARALLEL_H_
#define KMSMOTE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace kmsmote {

// Runs body(i) for i in [0, count) on up to `workers` threads. Tasks are
// claimed dynamically, so body must only write to per-index state. The
// first exception thrown by any task is rethrown after all workers join.
void ParallelFor(std::size_t count, int workers,
                 const std::function<void(std::size_t)>& body);

// Hardware concurrency, at least 1.
int DefaultWorkers();

}  // namespace kmsmote

#endif  // KMSMOTE_PARALLEL_H_
