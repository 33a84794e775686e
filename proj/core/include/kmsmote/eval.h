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

// Evaluation protocol: repeated stratified cross-validation with in-fold
// oversampling, grid search over oversampler x classifier hyperparameters,
// best-over-grid aggregation, mean ranking and the Friedman test.
//
// For every fold the oversampler sees the training split only; the test
// split is scored untouched. Every (dataset, repeat, fold, oversampler grid
// point) cell draws from its own substream of the master seed, so results
// do not depend on worker count or on which other grid points exist.

#ifndef KMSMOTE_EVAL_H_
#define KMSMOTE_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "kmsmote/classifiers.h"
#include "kmsmote/data.h"
#include "kmsmote/oversampler_spec.h"
#include "kmsmote/stats.h"

namespace kmsmote {

enum class Metric { kGMean, kF1, kAuprc };

// "gmean", "f1", "auprc".
std::string MetricName(Metric metric);
Metric ParseMetric(std::string_view name);

// Harness-facing oversampler: one grid point of one method.
class Oversampler {
 public:
  virtual ~Oversampler() = default;
  virtual std::string method() const = 0;
  virtual std::string params() const = 0;
  virtual Dataset Resample(const Dataset& train, std::uint64_t seed) const = 0;
  // Grid points needing more training rows than this are skipped.
  virtual std::size_t min_rows() const { return 0; }
};

class SpecOversampler final : public Oversampler {
 public:
  explicit SpecOversampler(OversamplerSpec spec) : spec_(std::move(spec)) {}
  std::string method() const override { return MethodName(spec_.method); }
  std::string params() const override { return spec_.Describe(); }
  Dataset Resample(const Dataset& train, std::uint64_t seed) const override;
  std::size_t min_rows() const override;
  const OversamplerSpec& spec() const { return spec_; }

 private:
  OversamplerSpec spec_;
};

struct GridSpec {
  std::vector<std::shared_ptr<const Oversampler>> oversamplers;
  std::vector<std::shared_ptr<const Classifier>> classifiers;
  std::vector<Metric> metrics = {Metric::kGMean, Metric::kF1, Metric::kAuprc};

  // Full benchmark grid: random; SMOTE, borderline-SMOTE1/2 with
  // knn in {3,5,20}; k-means SMOTE with k in kms_k, knn in {3,5,20,all},
  // irt in {1,inf}, de in {0,2,auto}; no oversampling. KNN with k in
  // {3,5,8} and LR.
  static GridSpec Full(std::vector<int> kms_k = {2, 20, 50, 100, 250, 500});
  // Full() restricted to k in {2, 20, 50}.
  static GridSpec DeskScale();

  // Throws InputError on an empty grid or a missing "none" baseline.
  void Validate() const;
};

std::vector<std::shared_ptr<const Oversampler>> ExpandOversamplerGrid(
    OversamplerMethod method, const std::vector<int>& kms_k = {});

struct ExperimentOptions {
  int folds = 5;
  int repeats = 5;
  std::uint64_t seed = 0;
  int jobs = 1;
  // Per-cell score cache; empty disables caching.
  std::filesystem::path cache_dir;
};

// Mean and spread of one (oversampler grid point, classifier grid point,
// metric) over all folds of one dataset.
struct GridPointScore {
  std::string dataset;
  std::string method;
  std::string oversampler_params;
  std::string classifier;
  std::string classifier_params;
  Metric metric = Metric::kGMean;
  std::string status;  // "ok", "skipped" or "failed"
  double mean = 0.0;
  double std = 0.0;    // sample standard deviation over folds
  std::vector<double> repeat_means;
  std::vector<double> fold_scores;  // repeat-major, NaN where not scored
};

// Best grid point per (dataset, classifier family, metric, method).
struct BestScore {
  std::string dataset;
  std::string classifier;
  Metric metric = Metric::kGMean;
  std::string method;
  std::string oversampler_params;
  std::string classifier_params;
  bool valid = false;
  double mean = 0.0;
  double std = 0.0;
  std::vector<double> repeat_scores;
};

struct RankingResult {
  std::string classifier;
  std::string metric;
  std::vector<std::string> methods;
  std::vector<double> mean_ranks;
  std::size_t blocks = 0;  // datasets x repeats
  bool friedman_valid = false;
  FriedmanResult friedman;
};

struct EvalReport {
  int folds = 0;
  int repeats = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> dataset_metadata;  // JSON objects
  std::vector<std::string> oversampler_grid;  // "method:params"
  std::vector<std::string> classifier_grid;
  std::vector<std::string> metrics;
  std::vector<GridPointScore> grid;
  std::vector<BestScore> best;
  std::vector<RankingResult> rankings;
  std::vector<std::string> skipped;
  std::vector<std::string> failures;
  // Run statistics; not written to report files.
  std::size_t cells_total = 0;
  std::size_t cells_from_cache = 0;
};

EvalReport RunExperiment(const std::vector<Dataset>& datasets,
                         const GridSpec& grid,
                         const ExperimentOptions& options);

// Score of the best grid point of one method in one repetition.
struct RepeatScore {
  std::string dataset;
  std::string classifier;
  std::string metric;
  std::string method;
  int repeat = 0;
  double score = 0.0;
};

std::vector<RepeatScore> CollectRepeatScores(const EvalReport& report);

// Ranks methods within each (dataset, repeat) block, rank 1 best, ties
// averaged; then mean ranks and the Friedman test per (classifier, metric).
// Methods are ordered by `method_order`, then by first appearance.
std::vector<RankingResult> RankMethods(
    const std::vector<RepeatScore>& scores,
    const std::vector<std::string>& method_order = {});

// Writes report.json, grid_scores.csv, fold_scores.csv, repeat_scores.csv,
// ranks.csv and friedman.csv into `dir`. Byte-identical for identical reports.
void WriteReport(const EvalReport& report, const std::filesystem::path& dir);

std::string FormatRepeatScoresCsv(const std::vector<RepeatScore>& scores);
std::vector<RepeatScore> ParseRepeatScoresCsv(std::string_view text);
// One row per method, one column per "classifier/metric".
std::string FormatRanksCsv(const std::vector<RankingResult>& rankings);
std::string FormatFriedmanCsv(const std::vector<RankingResult>& rankings);

}  // namespace kmsmote

#endif  // KMSMOTE_EVAL_H_
