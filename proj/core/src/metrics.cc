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

#include "kmsmote/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "kmsmote/error.h"

namespace kmsmote {

ConfusionMatrix Confusion(std::span<const int> predicted,
                          std::span<const int> truth) {
  if (predicted.size() != truth.size()) {
    throw InputError("Confusion: prediction and truth lengths differ");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool p = predicted[i] == 1;
    if (truth[i] == 1) {
      p ? ++cm.tp : ++cm.fn;
    } else {
      p ? ++cm.fp : ++cm.tn;
    }
  }
  return cm;
}

BasicRates ComputeRates(const ConfusionMatrix& cm) {
  auto ratio = [](std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  BasicRates r;
  r.accuracy = ratio(cm.tp + cm.tn, cm.total());
  r.error_rate = 1.0 - r.accuracy;
  r.sensitivity = ratio(cm.tp, cm.positives());
  r.specificity = ratio(cm.tn, cm.negatives());
  r.precision_undefined = cm.predicted_positives() == 0;
  r.precision = ratio(cm.tp, cm.predicted_positives());
  return r;
}

double F1Score(const ConfusionMatrix& cm, double alpha) {
  if (!(alpha > 0.0)) throw InputError("F1Score: alpha must be > 0");
  const BasicRates r = ComputeRates(cm);
  const double denominator = r.sensitivity + alpha * r.precision;
  if (denominator == 0.0) return 0.0;
  return (1.0 + alpha) * r.sensitivity * r.precision / denominator;
}

double GMean(const ConfusionMatrix& cm) {
  const BasicRates r = ComputeRates(cm);
  return std::sqrt(r.sensitivity * r.specificity);
}

double Auprc(std::span<const double> scores, std::span<const int> truth) {
  if (scores.size() != truth.size()) {
    throw InputError("Auprc: score and truth lengths differ");
  }
  const auto positives = static_cast<std::size_t>(
      std::count(truth.begin(), truth.end(), 1));
  if (positives == 0 || positives == truth.size()) {
    throw InputError("Auprc: needs at least one positive and one negative");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  double area = 0.0;
  double previous_recall = 0.0;
  std::size_t tp = 0;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < order.size();) {
    const double threshold = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == threshold; ++i) {
      tp += truth[order[i]] == 1;
      ++seen;
    }
    const double recall =
        static_cast<double>(tp) / static_cast<double>(positives);
    const double precision =
        static_cast<double>(tp) / static_cast<double>(seen);
    area += (recall - previous_recall) * precision;
    previous_recall = recall;
  }
  return area;
}

}  // namespace kmsmote
