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

// Rank aggregation and the Friedman test.

#ifndef KMSMOTE_STATS_H_
#define KMSMOTE_STATS_H_

#include <span>
#include <vector>

namespace kmsmote {

// Rank 1 for the highest score; equal scores share the average of the
// ranks they span. NaN scores rank last (tied among themselves).
std::vector<double> AverageRanks(std::span<const double> scores);

// blocks[b][j] is the score of method j in block b. Returns each method's
// rank averaged over blocks. Needs >= 2 methods and >= 1 block.
std::vector<double> MeanRanks(const std::vector<std::vector<double>>& blocks);

struct FriedmanResult {
  double statistic = 0.0;
  double p_value = 1.0;
  bool reject = false;  // p_value < alpha
};

// ranks[b][j] is the rank of method j in block b. With k methods and N
// blocks: chi2_F = 12N / (k(k+1)) * sum_j Rbar_j^2 - 3N(k+1), p from the
// chi-squared distribution with k - 1 degrees of freedom. Needs k >= 3 and
// N >= 2.
FriedmanResult FriedmanTest(const std::vector<std::vector<double>>& ranks,
                            double alpha = 0.05);

// Regularized upper incomplete gamma Q(a, x), a > 0, x >= 0. Series for
// x < a + 1, Lentz continued fraction otherwise.
double RegularizedGammaQ(double a, double x);

// P(X > x) for X ~ chi-squared(df).
double ChiSquaredSurvival(double x, double df);

}  // namespace kmsmote

#endif  // KMSMOTE_STATS_H_
