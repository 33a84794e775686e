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

// Imbalance-aware classification metrics. The minority class (label 1) is
// the positive class.

#ifndef KMSMOTE_METRICS_H_
#define KMSMOTE_METRICS_H_

#include <cstddef>
#include <span>

namespace kmsmote {

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t positives() const { return tp + fn; }
  std::size_t negatives() const { return tn + fp; }
  std::size_t predicted_positives() const { return tp + fp; }
  std::size_t total() const { return tp + fp + tn + fn; }

  bool operator==(const ConfusionMatrix&) const = default;
};

ConfusionMatrix Confusion(std::span<const int> predicted,
                          std::span<const int> truth);

struct BasicRates {
  double accuracy = 0.0;
  double error_rate = 0.0;
  double sensitivity = 0.0;  // recall, true positive rate
  double specificity = 0.0;
  double precision = 0.0;
  // tp + fp == 0: precision is reported as 0.
  bool precision_undefined = false;
};

// Sensitivity (specificity) is 0 when there are no positives (negatives).
BasicRates ComputeRates(const ConfusionMatrix& cm);

// (1 + alpha) sens prec / (sens + alpha prec); 0 when the denominator is 0.
double F1Score(const ConfusionMatrix& cm, double alpha = 1.0);

// sqrt(sensitivity * specificity).
double GMean(const ConfusionMatrix& cm);

// Area under the precision-recall curve by the step (average precision)
// rule: sum over distinct thresholds of (R_i - R_{i-1}) * P_i, scanning
// scores in descending order with equal scores forming one threshold.
// Needs at least one positive and one negative.
double Auprc(std::span<const double> scores, std::span<const int> truth);

}  // namespace kmsmote

#endif  // KMSMOTE_METRICS_H_
