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

#include "kmsmote/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kmsmote/error.h"

namespace kmsmote {
namespace {

constexpr int kMaxGammaIterations = 1000;
constexpr double kGammaEpsilon = 1e-16;

double LowerSeries(double a, double x) {
  // P(a, x) = x^a e^-x / Gamma(a+1) * sum_n x^n / ((a+1)...(a+n))
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxGammaIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kGammaEpsilon) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double UpperContinuedFraction(double a, double x) {
  constexpr double kTiny = std::numeric_limits<double>::min() / kGammaEpsilon;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxGammaIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kGammaEpsilon) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

std::vector<double> AverageRanks(std::span<const double> scores) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    return std::isnan(scores[i]) ? -std::numeric_limits<double>::infinity()
                                 : scores[i];
  };
  auto is_nan = [&](std::size_t i) { return std::isnan(scores[i]); };
  // NaN after everything, including -inf.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (is_nan(a) != is_nan(b)) return is_nan(b);
    return key(a) > key(b);
  });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && is_nan(order[j]) == is_nan(order[i]) &&
           (is_nan(order[i]) || key(order[j]) == key(order[i]))) {
      ++j;
    }
    // Positions i..j-1 hold ranks i+1..j.
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = rank;
    i = j;
  }
  return ranks;
}

std::vector<double> MeanRanks(const std::vector<std::vector<double>>& blocks) {
  if (blocks.empty()) throw InputError("MeanRanks: no blocks");
  const std::size_t k = blocks.front().size();
  if (k < 2) throw InputError("MeanRanks: need at least two methods");
  std::vector<double> mean(k, 0.0);
  for (const auto& block : blocks) {
    if (block.size() != k) throw InputError("MeanRanks: ragged blocks");
    const auto ranks = AverageRanks(block);
    for (std::size_t j = 0; j < k; ++j) mean[j] += ranks[j];
  }
  for (auto& v : mean) v /= static_cast<double>(blocks.size());
  return mean;
}

FriedmanResult FriedmanTest(const std::vector<std::vector<double>>& ranks,
                            double alpha) {
  const std::size_t blocks = ranks.size();
  if (blocks < 2) throw InputError("Friedman test needs at least two blocks");
  const std::size_t k = ranks.front().size();
  if (k < 3) throw InputError("Friedman test needs at least three methods");
  std::vector<double> mean(k, 0.0);
  for (const auto& row : ranks) {
    if (row.size() != k) throw InputError("Friedman test: ragged rank matrix");
    for (std::size_t j = 0; j < k; ++j) mean[j] += row[j];
  }
  double sum_sq = 0.0;
  for (auto& v : mean) {
    v /= static_cast<double>(blocks);
    sum_sq += v * v;
  }
  const double n = static_cast<double>(blocks);
  const double kk = static_cast<double>(k);
  FriedmanResult result;
  result.statistic =
      12.0 * n / (kk * (kk + 1.0)) * sum_sq - 3.0 * n * (kk + 1.0);
  // All-equal ranks cancel exactly in theory; clear rounding residue.
  if (std::abs(result.statistic) < 1e-9 * 3.0 * n * (kk + 1.0)) {
    result.statistic = 0.0;
  }
  result.p_value = ChiSquaredSurvival(result.statistic, kk - 1.0);
  result.reject = result.p_value < alpha;
  return result;
}

double RegularizedGammaQ(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) {
    throw InputError("RegularizedGammaQ: need a > 0 and x >= 0");
  }
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - LowerSeries(a, x);
  return UpperContinuedFraction(a, x);
}

double ChiSquaredSurvival(double x, double df) {
  if (x <= 0.0) return 1.0;
  return RegularizedGammaQ(0.5 * df, 0.5 * x);
}

}  // namespace kmsmote
