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

#ifndef KMSMOTE_ERROR_H_
#define KMSMOTE_ERROR_H_

#include <stdexcept>
#include <string>

namespace kmsmote {

// Invalid user input or a violated precondition on a public operation.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// k-means SMOTE found no cluster passing the imbalance ratio filter.
class NoMinorityClusterError : public std::runtime_error {
 public:
  explicit NoMinorityClusterError(const std::string& what)
      : std::runtime_error(what) {}
};

// An optimizer diverged (non-finite loss).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace kmsmote

#endif  // KMSMOTE_ERROR_H_
