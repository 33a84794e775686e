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

#include "kmsmote/classifiers.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "kmsmote/error.h"
#include "kmsmote/neighbors.h"

namespace kmsmote {
namespace {

void CheckColumns(std::size_t expected, const Matrix& rows) {
  if (!rows.empty() && rows.cols() != expected) {
    throw InputError("model expects " + std::to_string(expected) +
                     " features, got " + std::to_string(rows.cols()));
  }
}

}  // namespace

std::vector<int> PredictLabels(std::span<const double> scores) {
  std::vector<int> labels(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    labels[i] = scores[i] > 0.5 ? kMinority : kMajority;
  }
  return labels;
}

double Sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

KnnModel::KnnModel(Matrix features, std::vector<int> labels, int k)
    : features_(std::move(features)), labels_(std::move(labels)), k_(k) {
  if (k_ < 1 || static_cast<std::size_t>(k_) > features_.rows()) {
    throw InputError("KNN: k = " + std::to_string(k_) + " must be in [1, " +
                     std::to_string(features_.rows()) + "]");
  }
}

std::vector<double> KnnModel::PredictScores(const Matrix& rows) const {
  CheckColumns(features_.cols(), rows);
  std::vector<double> scores(rows.rows());
  std::vector<Neighbor> neighbors;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    NearestInto(features_, rows.row(i), static_cast<std::size_t>(k_),
                features_.rows(), neighbors);
    std::size_t votes = 0;
    for (const auto& nb : neighbors) votes += labels_[nb.index] == kMinority;
    scores[i] = static_cast<double>(votes) / static_cast<double>(k_);
  }
  return scores;
}

KnnModel FitKnn(const Dataset& train, int k) {
  return KnnModel(train.features(),
                  std::vector<int>(train.labels().begin(), train.labels().end()),
                  k);
}

std::vector<std::vector<double>> KnnScores(const Dataset& train,
                                           const Matrix& rows,
                                           std::span<const int> ks) {
  const Matrix& features = train.features();
  int max_k = 0;
  for (int k : ks) {
    if (k < 1 || static_cast<std::size_t>(k) > features.rows()) {
      throw InputError("KNN: k = " + std::to_string(k) + " must be in [1, " +
                       std::to_string(features.rows()) + "]");
    }
    max_k = std::max(max_k, k);
  }
  CheckColumns(features.cols(), rows);
  std::vector<std::vector<double>> scores(ks.size(),
                                          std::vector<double>(rows.rows()));
  std::vector<Neighbor> neighbors;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    NearestInto(features, rows.row(i), static_cast<std::size_t>(max_k),
                features.rows(), neighbors);
    for (std::size_t j = 0; j < ks.size(); ++j) {
      std::size_t votes = 0;
      for (int n = 0; n < ks[j]; ++n) {
        votes += train.label(neighbors[n].index) == kMinority;
      }
      scores[j][i] = static_cast<double>(votes) / static_cast<double>(ks[j]);
    }
  }
  return scores;
}

LogRegModel::LogRegModel(std::vector<double> mean, std::vector<double> scale,
                         std::vector<double> weights, double bias, int epochs,
                         std::vector<double> loss_history)
    : mean_(std::move(mean)),
      scale_(std::move(scale)),
      weights_(std::move(weights)),
      bias_(bias),
      epochs_(epochs),
      loss_history_(std::move(loss_history)) {}

std::vector<double> LogRegModel::PredictScores(const Matrix& rows) const {
  CheckColumns(weights_.size(), rows);
  std::vector<double> scores(rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const auto x = rows.row(i);
    double z = bias_;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
      z += weights_[j] * (x[j] - mean_[j]) / scale_[j];
    }
    scores[i] = Sigmoid(z);
  }
  return scores;
}

LossAndGradient LogisticObjective(const Matrix& features,
                                  std::span<const int> labels,
                                  std::span<const double> weights, double bias,
                                  double l2) {
  const std::size_t n = features.rows();
  const std::size_t m = features.cols();
  LossAndGradient out;
  out.grad_weights.assign(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = features.row(i);
    double z = bias;
    for (std::size_t j = 0; j < m; ++j) z += weights[j] * x[j];
    const double y = labels[i];
    // softplus(z) and Sigmoid(z) share exp(-|z|).
    const double e = std::exp(-std::abs(z));
    out.loss += std::max(z, 0.0) + std::log1p(e) - y * z;
    const double residual = (z >= 0.0 ? 1.0 : e) / (1.0 + e) - y;
    for (std::size_t j = 0; j < m; ++j) out.grad_weights[j] += residual * x[j];
    out.grad_bias += residual;
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  out.loss *= inv_n;
  out.grad_bias *= inv_n;
  double penalty = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    out.grad_weights[j] = out.grad_weights[j] * inv_n + l2 * weights[j];
    penalty += weights[j] * weights[j];
  }
  out.loss += 0.5 * l2 * penalty;
  return out;
}

LogRegModel FitLogReg(const Dataset& train, const LogRegOptions& options) {
  if (options.max_epochs < 0 || !(options.learning_rate > 0.0) ||
      !(options.l2 >= 0.0) || !(options.tol >= 0.0)) {
    throw InputError("logistic regression: invalid options");
  }
  const std::size_t n = train.size();
  const std::size_t m = train.num_features();
  std::vector<double> mean(m, 0.0);
  std::vector<double> scale(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) mean[j] += train.row(i)[j];
  }
  for (auto& v : mean) v /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = train.row(i)[j] - mean[j];
      scale[j] += d * d;
    }
  }
  for (auto& v : scale) {
    v = std::sqrt(v / static_cast<double>(n));
    if (!(v > 0.0)) v = 1.0;  // constant column
  }
  Matrix standardized(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      standardized(i, j) = (train.row(i)[j] - mean[j]) / scale[j];
    }
  }

  std::vector<double> weights(m, 0.0);
  double bias = 0.0;
  std::vector<double> history;
  int epochs = 0;
  while (true) {
    const LossAndGradient lg = LogisticObjective(
        standardized, train.labels(), weights, bias, options.l2);
    if (!std::isfinite(lg.loss)) {
      throw NumericalError(
          "logistic regression diverged (non-finite loss); lower the "
          "learning rate");
    }
    history.push_back(lg.loss);
    double norm2 = lg.grad_bias * lg.grad_bias;
    for (double g : lg.grad_weights) norm2 += g * g;
    if (epochs == options.max_epochs || std::sqrt(norm2) < options.tol) break;
    for (std::size_t j = 0; j < m; ++j) {
      weights[j] -= options.learning_rate * lg.grad_weights[j];
    }
    bias -= options.learning_rate * lg.grad_bias;
    ++epochs;
  }
  return LogRegModel(std::move(mean), std::move(scale), std::move(weights),
                     bias, epochs, std::move(history));
}

std::unique_ptr<TrainedModel> KnnClassifier::Fit(const Dataset& train) const {
  return std::make_unique<KnnModel>(FitKnn(train, k_));
}

std::unique_ptr<TrainedModel> LogRegClassifier::Fit(
    const Dataset& train) const {
  return std::make_unique<LogRegModel>(FitLogReg(train, options_));
}

}  // namespace kmsmote
