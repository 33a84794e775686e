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


// Independent reference implementations used as test oracles. Each one is
// written from the definition, as plainly as possible, and shares no code
// with the library beyond its data types.

#ifndef KMSMOTE_TESTS_ORACLES_H_
#define KMSMOTE_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <vector>

namespace kmsmote::oracle {

// Average precision by enumerating every distinct score as a threshold
// ("predict positive iff score >= t"), computing precision and recall from
// scratch for each, and summing recall increments times precision.
inline double BruteForceAuprc(std::span<const double> scores,
                              std::span<const int> truth) {
  std::set<double, std::greater<double>> thresholds(scores.begin(),
                                                    scores.end());
  double positives = 0;
  for (int t : truth) positives += t;
  double area = 0.0, prev_recall = 0.0;
  for (double t : thresholds) {
    double tp = 0, fp = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] >= t) (truth[i] ? tp : fp) += 1;
    }
    const double recall = tp / positives;
    const double precision = tp / (tp + fp);
    area += (recall - prev_recall) * precision;
    prev_recall = recall;
  }
  return area;
}

// Euclidean distance written out longhand.
inline double Distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Mean over all ordered pairs i != j of |x_i - x_j|.
inline double MeanPairwiseDistance(const std::vector<std::vector<double>>& x) {
  double s = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i == j) continue;
      s += Distance(x[i], x[j]);
      ++pairs;
    }
  }
  return s / static_cast<double>(pairs);
}

// Index of the nearest of `centers` to x by a linear scan, first wins ties.
inline int NearestCenter(const std::vector<std::vector<double>>& centers,
                         std::span<const double> x) {
  int best = 0;
  double best_d = INFINITY;
  for (std::size_t c = 0; c < centers.size(); ++c) {
    double d = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      d += (x[j] - centers[c][j]) * (x[j] - centers[c][j]);
    }
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(c);
    }
  }
  return best;
}

// Chi-squared survival function for even degrees of freedom, closed form:
// Q = exp(-x/2) * sum_{i < df/2} (x/2)^i / i!.
inline double ChiSquaredSurvivalEvenDf(double x, int df) {
  double term = 1.0, sum = 1.0;
  for (int i = 1; i < df / 2; ++i) {
    term *= (x / 2.0) / i;
    sum += term;
  }
  return std::exp(-x / 2.0) * sum;
}

// Central finite difference of f at x along coordinate j.
inline double CentralDifference(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x, std::size_t j, double h) {
  const double x0 = x[j];
  x[j] = x0 + h;
  const double up = f(x);
  x[j] = x0 - h;
  const double down = f(x);
  return (up - down) / (2.0 * h);
}

// Largest-remainder apportionment, written directly from its definition:
// floors first, then the remaining units to the largest fractional parts
// (ties: larger weight, then lower position).
inline std::vector<std::size_t> LargestRemainder(
    const std::vector<double>& weights, std::size_t n) {
  std::vector<std::size_t> q(weights.size());
  std::vector<std::size_t> order(weights.size());
  std::size_t used = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    q[i] = static_cast<std::size_t>(std::floor(weights[i] * n));
    used += q[i];
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    const double ra = weights[a] * n - std::floor(weights[a] * n);
    const double rb = weights[b] * n - std::floor(weights[b] * n);
    if (ra != rb) return ra > rb;
    return weights[a] > weights[b];
  });
  for (std::size_t i = 0; used < n; ++i, ++used) ++q[order[i % order.size()]];
  return q;
}

}  // namespace kmsmote::oracle

#endif  // KMSMOTE_TESTS_ORACLES_H_
