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

// Reference classifiers used to score oversamplers. Both emit a minority
// confidence in [0, 1] per row.

#ifndef KMSMOTE_CLASSIFIERS_H_
#define KMSMOTE_CLASSIFIERS_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kmsmote/data.h"
#include "kmsmote/matrix.h"

namespace kmsmote {

enum class ClassifierKind { kKnn, kLogReg, kOther };

class TrainedModel {
 public:
  virtual ~TrainedModel() = default;
  virtual ClassifierKind kind() const = 0;
  virtual std::size_t num_features() const = 0;
  // Minority confidence per row of `rows`. Throws InputError on a feature
  // count mismatch.
  virtual std::vector<double> PredictScores(const Matrix& rows) const = 0;
};

// Hard labels: 1 iff score > 0.5, so a tied vote or a zero logit predicts
// the majority class.
std::vector<int> PredictLabels(std::span<const double> scores);

class KnnModel final : public TrainedModel {
 public:
  KnnModel(Matrix features, std::vector<int> labels, int k);

  ClassifierKind kind() const override { return ClassifierKind::kKnn; }
  std::size_t num_features() const override { return features_.cols(); }
  // Fraction of minority labels among the k nearest training rows, ties in
  // distance broken by lower training index.
  std::vector<double> PredictScores(const Matrix& rows) const override;
  int k() const { return k_; }

 private:
  Matrix features_;
  std::vector<int> labels_;
  int k_;
};

// Uniform-vote k-nearest neighbors; k must be in [1, rows(train)].
KnnModel FitKnn(const Dataset& train, int k);

// Scores of several uniform-vote KNN models from a single neighbor search.
// Entry j equals FitKnn(train, ks[j]).PredictScores(rows).
std::vector<std::vector<double>> KnnScores(const Dataset& train,
                                           const Matrix& rows,
                                           std::span<const int> ks);

struct LogRegOptions {
  int max_epochs = 500;
  double learning_rate = 0.1;
  double l2 = 1e-4;
  // Stop when the gradient norm falls below this.
  double tol = 1e-6;
  // Full-batch descent from zero weights is deterministic; the seed is kept
  // so every classifier shares the same fit signature.
  std::uint64_t seed = 0;
};

class LogRegModel final : public TrainedModel {
 public:
  LogRegModel(std::vector<double> mean, std::vector<double> scale,
              std::vector<double> weights, double bias, int epochs,
              std::vector<double> loss_history);

  ClassifierKind kind() const override { return ClassifierKind::kLogReg; }
  std::size_t num_features() const override { return weights_.size(); }
  std::vector<double> PredictScores(const Matrix& rows) const override;

  // Weights act on standardized features.
  const std::vector<double>& weights() const { return weights_; }
  double bias() const { return bias_; }
  int epochs() const { return epochs_; }
  // Training loss before each update, then after the last one.
  const std::vector<double>& loss_history() const { return loss_history_; }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
  std::vector<double> weights_;
  double bias_;
  int epochs_;
  std::vector<double> loss_history_;
};

// Minimizes mean logistic loss + l2/2 |w|^2 (bias unpenalized) by full-batch
// gradient descent on features standardized with the training mean and
// standard deviation. Throws NumericalError if the loss becomes non-finite.
LogRegModel FitLogReg(const Dataset& train, const LogRegOptions& options = {});

struct LossAndGradient {
  double loss = 0.0;
  std::vector<double> grad_weights;
  double grad_bias = 0.0;
};

// Objective and analytic gradient on `features` as given (no scaling):
// grad_w = mean((sigmoid(w.x + b) - y) x) + l2 w.
LossAndGradient LogisticObjective(const Matrix& features,
                                  std::span<const int> labels,
                                  std::span<const double> weights, double bias,
                                  double l2);

double Sigmoid(double z);

// Harness-facing interface: a named, configured learner.
class Classifier {
 public:
  virtual ~Classifier() = default;
  // Family name shared by every grid point ("KNN", "LR").
  virtual std::string name() const = 0;
  // Hyperparameters of this grid point ("k=5"), empty if none.
  virtual std::string params() const = 0;
  virtual std::unique_ptr<TrainedModel> Fit(const Dataset& train) const = 0;
};

class KnnClassifier final : public Classifier {
 public:
  explicit KnnClassifier(int k) : k_(k) {}
  std::string name() const override { return "KNN"; }
  std::string params() const override { return "k=" + std::to_string(k_); }
  std::unique_ptr<TrainedModel> Fit(const Dataset& train) const override;
  int k() const { return k_; }

 private:
  int k_;
};

class LogRegClassifier final : public Classifier {
 public:
  explicit LogRegClassifier(LogRegOptions options = {}) : options_(options) {}
  std::string name() const override { return "LR"; }
  std::string params() const override { return ""; }
  std::unique_ptr<TrainedModel> Fit(const Dataset& train) const override;

 private:
  LogRegOptions options_;
};

}  // namespace kmsmote

#endif  // KMSMOTE_CLASSIFIERS_H_
