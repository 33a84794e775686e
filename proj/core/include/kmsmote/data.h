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

// Binary classification datasets: representation, CSV ingestion, class
// statistics, stratified folding and derived datasets.

#ifndef KMSMOTE_DATA_H_
#define KMSMOTE_DATA_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmsmote/matrix.h"

namespace kmsmote {

// Label 1 is always the minority (positive) class.
inline constexpr int kMinority = 1;
inline constexpr int kMajority = 0;

struct ClassStats {
  std::size_t minority_count = 0;
  std::size_t majority_count = 0;
  // majority_count / minority_count.
  double imbalance_ratio = 0.0;
};

// Original spellings of the two classes, used when writing CSV back out.
struct ClassNames {
  std::string majority = "0";
  std::string minority = "1";

  bool operator==(const ClassNames&) const = default;
};

// Immutable feature matrix with binary labels.
//
// The constructor enforces: rows == labels > 0, labels in {0, 1}, both
// classes present, all features finite. Datasets produced by LoadCsv and
// MakeBlobs additionally have minority_count <= majority_count; subsets and
// oversampled datasets may not.
class Dataset {
 public:
  Dataset(Matrix features, std::vector<int> labels, std::string name = {},
          std::vector<std::string> feature_names = {},
          ClassNames class_names = {}, std::string label_name = "class");

  const Matrix& features() const { return features_; }
  std::span<const int> labels() const { return labels_; }
  int label(std::size_t i) const { return labels_[i]; }
  std::span<const double> row(std::size_t i) const { return features_.row(i); }

  std::size_t size() const { return labels_.size(); }
  std::size_t num_features() const { return features_.cols(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  const ClassNames& class_names() const { return class_names_; }
  const std::string& label_name() const { return label_name_; }

  ClassStats stats() const;
  std::size_t minority_count() const { return minority_count_; }
  std::size_t majority_count() const { return size() - minority_count_; }

  // Row indices of each class, ascending.
  std::vector<std::size_t> MinorityIndices() const;
  std::vector<std::size_t> MajorityIndices() const;

  Dataset Subset(std::span<const std::size_t> rows) const;
  Dataset WithName(std::string name) const;
  // Appends `rows` labelled as minority.
  Dataset WithMinorityRows(const Matrix& rows) const;

  bool operator==(const Dataset& other) const = default;

 private:
  Matrix features_;
  std::vector<int> labels_;
  std::string name_;
  std::vector<std::string> feature_names_;
  ClassNames class_names_;
  std::string label_name_;
  std::size_t minority_count_ = 0;
};

struct CsvOptions {
  // Label column by header name or zero-based index; neither means last.
  std::optional<std::string> label_column;
  std::optional<std::size_t> label_index;
  // Label value that becomes the minority; all other values are merged.
  std::optional<std::string> minority_label;
  // With more than two classes, take the smallest as minority.
  bool one_vs_rest = false;
  // Defaults to the file stem.
  std::optional<std::string> name;
};

// Comma separated, header first, '.' decimal point, UTF-8. Without an
// override the least frequent label is the minority, ties going to the
// lexicographically smaller label. Throws InputError on malformed files.
Dataset LoadCsv(const std::filesystem::path& path,
                const CsvOptions& options = {});
Dataset ParseCsv(std::string_view text, const CsvOptions& options);

// Features then label column, header first, doubles in shortest round-trip
// form. ParseCsv(FormatCsv(d)) reproduces d.
std::string FormatCsv(const Dataset& dataset);
void WriteCsv(const Dataset& dataset, const std::filesystem::path& path);

// {"name", "m", "counts": {"minority", "majority"}, "imbalanceRatio"}.
std::string DatasetMetadataJson(const Dataset& dataset);

// Randomly drops minority rows so the imbalance ratio grows by about
// `factor`: keeps round(minority / factor) of them, in original order.
// Returns nullopt when fewer than 8 minority rows would remain.
std::optional<Dataset> MakeUndersampledVariant(const Dataset& dataset,
                                               double factor,
                                               std::uint64_t seed);

inline constexpr std::size_t kMinVariantMinority = 8;

struct Fold {
  int repeat = 0;
  int index = 0;  // within the repeat
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

struct FoldPlan {
  int k = 0;
  int repeats = 0;
  std::uint64_t seed = 0;
  std::vector<Fold> folds;  // repeat-major
};

// Repeated stratified k-fold. Each class is shuffled and dealt round-robin
// over the folds, the majority continuing where the minority stopped so
// fold sizes differ by at most one. Requires 2 <= k <= minority count.
FoldPlan StratifiedKFold(const Dataset& dataset, int k, int repeats,
                         std::uint64_t seed);

// Two unit-variance Gaussian blobs; the majority is centred at the origin
// and the minority at `separation` along the first axis.
Dataset MakeBlobs(std::size_t n_minority, std::size_t n_majority,
                  std::size_t m, double separation, std::uint64_t seed);

}  // namespace kmsmote

#endif  // KMSMOTE_DATA_H_
