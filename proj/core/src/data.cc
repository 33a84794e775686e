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

#include "kmsmote/data.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "kmsmote/error.h"
#include "kmsmote/io.h"
#include "kmsmote/random.h"

namespace kmsmote {

Dataset::Dataset(Matrix features, std::vector<int> labels, std::string name,
                 std::vector<std::string> feature_names,
                 ClassNames class_names, std::string label_name)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      name_(std::move(name)),
      feature_names_(std::move(feature_names)),
      class_names_(std::move(class_names)),
      label_name_(std::move(label_name)) {
  if (labels_.empty() || features_.rows() != labels_.size()) {
    throw InputError("dataset needs one label per row and at least one row");
  }
  if (!feature_names_.empty() && feature_names_.size() != features_.cols()) {
    throw InputError("feature name count does not match column count");
  }
  for (int y : labels_) {
    if (y != kMinority && y != kMajority) {
      throw InputError("labels must be 0 (majority) or 1 (minority)");
    }
    minority_count_ += (y == kMinority);
  }
  if (minority_count_ == 0 || minority_count_ == labels_.size()) {
    throw InputError("both classes must be present");
  }
  for (double v : features_.data()) {
    if (!std::isfinite(v)) throw InputError("features must be finite");
  }
}

ClassStats Dataset::stats() const {
  ClassStats s;
  s.minority_count = minority_count();
  s.majority_count = majority_count();
  s.imbalance_ratio = static_cast<double>(s.majority_count) /
                      static_cast<double>(s.minority_count);
  return s;
}

std::vector<std::size_t> Dataset::MinorityIndices() const {
  std::vector<std::size_t> out;
  out.reserve(minority_count());
  for (std::size_t i = 0; i < size(); ++i) {
    if (labels_[i] == kMinority) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Dataset::MajorityIndices() const {
  std::vector<std::size_t> out;
  out.reserve(majority_count());
  for (std::size_t i = 0; i < size(); ++i) {
    if (labels_[i] == kMajority) out.push_back(i);
  }
  return out;
}

Dataset Dataset::Subset(std::span<const std::size_t> rows) const {
  std::vector<int> labels;
  labels.reserve(rows.size());
  for (std::size_t r : rows) labels.push_back(labels_[r]);
  return Dataset(features_.Gather(rows), std::move(labels), name_,
                 feature_names_, class_names_, label_name_);
}

Dataset Dataset::WithName(std::string name) const {
  Dataset copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Dataset Dataset::WithMinorityRows(const Matrix& rows) const {
  if (rows.empty()) return *this;
  if (rows.cols() != num_features()) {
    throw InputError("appended rows have the wrong number of features");
  }
  Matrix features = features_;
  features.Reserve(size() + rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) features.AppendRow(rows.row(i));
  std::vector<int> labels = labels_;
  labels.insert(labels.end(), rows.rows(), kMinority);
  return Dataset(std::move(features), std::move(labels), name_,
                 feature_names_, class_names_, label_name_);
}

Dataset ParseCsv(std::string_view text, const CsvOptions& options) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // Header is the first non-empty line.
  std::size_t header_line = 0;
  while (header_line < lines.size() &&
         lines[header_line].find_first_not_of(" \t") == std::string_view::npos) {
    ++header_line;
  }
  if (header_line == lines.size()) throw InputError("CSV has no header");
  const std::vector<std::string> header = SplitCsvLine(lines[header_line]);
  if (header.size() < 2) {
    throw InputError("CSV needs at least one feature and a label column");
  }

  std::size_t label_col = header.size() - 1;
  if (options.label_column) {
    const auto it =
        std::find(header.begin(), header.end(), *options.label_column);
    if (it == header.end()) {
      throw InputError("label column '" + *options.label_column +
                       "' not found in header");
    }
    label_col = static_cast<std::size_t>(it - header.begin());
  } else if (options.label_index) {
    if (*options.label_index >= header.size()) {
      throw InputError("label column index " +
                       std::to_string(*options.label_index) + " out of range");
    }
    label_col = *options.label_index;
  }

  std::vector<std::string> feature_names;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j != label_col) feature_names.push_back(header[j]);
  }

  Matrix features;
  std::vector<std::string> raw_labels;
  std::vector<double> row(feature_names.size());
  for (std::size_t li = header_line + 1; li < lines.size(); ++li) {
    if (lines[li].find_first_not_of(" \t") == std::string_view::npos) continue;
    const auto fields = SplitCsvLine(lines[li]);
    if (fields.size() != header.size()) {
      throw InputError("line " + std::to_string(li + 1) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    std::size_t out = 0;
    for (std::size_t j = 0; j < fields.size(); ++j) {
      if (j == label_col) continue;
      if (!ParseDouble(fields[j], row[out])) {
        throw InputError("line " + std::to_string(li + 1) + ", column " +
                         std::to_string(j + 1) + " ('" + header[j] +
                         "'): cannot parse '" + fields[j] + "' as a number");
      }
      ++out;
    }
    features.AppendRow(row);
    raw_labels.push_back(fields[label_col]);
  }
  if (raw_labels.empty()) throw InputError("CSV has no data rows");

  std::map<std::string, std::size_t> counts;
  for (const auto& l : raw_labels) ++counts[l];
  if (counts.size() < 2) {
    throw InputError("label column has a single class; need two");
  }

  // Smallest class, ties to the lexicographically smaller label (map order).
  auto smallest = [&] {
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second < best->second) best = it;
    }
    return best->first;
  };

  ClassNames names;
  if (options.minority_label) {
    const auto it = counts.find(*options.minority_label);
    if (it == counts.end()) {
      throw InputError("minority label '" + *options.minority_label +
                       "' does not occur in the label column");
    }
    names.minority = it->first;
    if (2 * it->second > raw_labels.size()) {
      throw InputError("minority label '" + names.minority +
                       "' is more frequent than the remaining classes");
    }
  } else if (counts.size() == 2 || options.one_vs_rest) {
    names.minority = smallest();
  } else {
    throw InputError("label column has " + std::to_string(counts.size()) +
                     " classes; pass a minority label or enable one-vs-rest");
  }
  if (counts.size() == 2) {
    for (const auto& [label, count] : counts) {
      if (label != names.minority) names.majority = label;
    }
  } else {
    names.majority = "rest";
  }

  std::vector<int> labels;
  labels.reserve(raw_labels.size());
  for (const auto& l : raw_labels) {
    labels.push_back(l == names.minority ? kMinority : kMajority);
  }
  return Dataset(std::move(features), std::move(labels),
                 options.name.value_or("dataset"), std::move(feature_names),
                 std::move(names), header[label_col]);
}

Dataset LoadCsv(const std::filesystem::path& path, const CsvOptions& options) {
  CsvOptions resolved = options;
  if (!resolved.name) resolved.name = path.stem().string();
  try {
    return ParseCsv(ReadFile(path), resolved);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string FormatCsv(const Dataset& dataset) {
  std::string out;
  const std::size_t m = dataset.num_features();
  for (std::size_t j = 0; j < m; ++j) {
    out += dataset.feature_names().empty() ? "x" + std::to_string(j)
                                           : dataset.feature_names()[j];
    out += ',';
  }
  out += dataset.label_name();
  out += '\n';
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    for (double v : dataset.row(i)) {
      out += FormatDouble(v);
      out += ',';
    }
    out += dataset.label(i) == kMinority ? dataset.class_names().minority
                                         : dataset.class_names().majority;
    out += '\n';
  }
  return out;
}

void WriteCsv(const Dataset& dataset, const std::filesystem::path& path) {
  WriteFileAtomic(path, FormatCsv(dataset));
}

std::string DatasetMetadataJson(const Dataset& dataset) {
  const ClassStats s = dataset.stats();
  nlohmann::ordered_json j;
  j["name"] = dataset.name();
  j["m"] = dataset.num_features();
  j["counts"] = {{"minority", s.minority_count},
                 {"majority", s.majority_count}};
  j["imbalanceRatio"] = s.imbalance_ratio;
  return j.dump();
}

std::optional<Dataset> MakeUndersampledVariant(const Dataset& dataset,
                                               double factor,
                                               std::uint64_t seed) {
  if (!(factor >= 1.0)) throw InputError("undersampling factor must be >= 1");
  const auto minority = dataset.MinorityIndices();
  const auto target = static_cast<std::size_t>(
      std::lround(static_cast<double>(minority.size()) / factor));
  if (target < kMinVariantMinority) return std::nullopt;

  // Partial Fisher-Yates picks `target` minority rows.
  auto pool = minority;
  Rng rng(DeriveSeed(seed, {streams::kUndersample}));
  for (std::size_t i = 0; i < target; ++i) {
    const std::size_t j = i + rng.UniformIndex(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  std::vector<bool> keep(dataset.size(), false);
  for (std::size_t i = 0; i < target; ++i) keep[pool[i]] = true;
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (dataset.label(i) == kMajority || keep[i]) rows.push_back(i);
  }
  std::ostringstream name;
  name << dataset.name() << factor;
  return dataset.Subset(rows).WithName(name.str());
}

FoldPlan StratifiedKFold(const Dataset& dataset, int k, int repeats,
                         std::uint64_t seed) {
  if (k < 2) throw InputError("stratified k-fold needs k >= 2");
  if (repeats < 1) throw InputError("repeats must be positive");
  if (static_cast<std::size_t>(k) > dataset.minority_count()) {
    throw InputError("k = " + std::to_string(k) + " exceeds the " +
                     std::to_string(dataset.minority_count()) +
                     " minority instances");
  }
  FoldPlan plan;
  plan.k = k;
  plan.repeats = repeats;
  plan.seed = seed;
  const auto by_class = {dataset.MinorityIndices(), dataset.MajorityIndices()};
  for (int r = 0; r < repeats; ++r) {
    Rng rng(DeriveSeed(seed, {streams::kFolds, static_cast<std::uint64_t>(r)}));
    std::vector<int> fold_of(dataset.size());
    std::size_t slot = 0;
    for (auto indices : by_class) {
      for (std::size_t i = indices.size(); i > 1; --i) {
        std::swap(indices[i - 1], indices[rng.UniformIndex(i)]);
      }
      for (std::size_t idx : indices) {
        fold_of[idx] = static_cast<int>(slot % static_cast<std::size_t>(k));
        ++slot;
      }
    }
    for (int f = 0; f < k; ++f) {
      Fold fold;
      fold.repeat = r;
      fold.index = f;
      for (std::size_t i = 0; i < dataset.size(); ++i) {
        (fold_of[i] == f ? fold.test : fold.train).push_back(i);
      }
      plan.folds.push_back(std::move(fold));
    }
  }
  return plan;
}

Dataset MakeBlobs(std::size_t n_minority, std::size_t n_majority,
                  std::size_t m, double separation, std::uint64_t seed) {
  if (n_minority < 2 || n_majority < 2 || m < 1) {
    throw InputError("blobs need >= 2 rows per class and >= 1 feature");
  }
  if (n_minority > n_majority) {
    throw InputError("blobs: minority count exceeds majority count");
  }
  Rng rng(DeriveSeed(seed, {streams::kBlobs}));
  Matrix features(n_minority + n_majority, m);
  std::vector<int> labels(n_minority + n_majority, kMajority);
  for (std::size_t i = 0; i < features.rows(); ++i) {
    const bool minority = i >= n_majority;
    labels[i] = minority ? kMinority : kMajority;
    for (std::size_t j = 0; j < m; ++j) {
      features(i, j) = rng.NextNormal() + (minority && j == 0 ? separation : 0.0);
    }
  }
  return Dataset(std::move(features), std::move(labels), "blobs");
}

}  // namespace kmsmote
