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


#include "kmsmote/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "kmsmote/error.h"
#include "kmsmote/io.h"
#include "kmsmote/metrics.h"
#include "kmsmote/neighbors.h"
#include "kmsmote/parallel.h"
#include "kmsmote/random.h"

namespace kmsmote {
namespace {

using Json = nlohmann::ordered_json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string Hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

Json Number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double Mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? kNaN : s / static_cast<double>(v.size());
}

double SampleStd(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = Mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Scores of one cell: [classifier][metric], NaN when not computed.
struct CellResult {
  enum class Status { kOk, kSkipped, kFailed } status = Status::kOk;
  std::string message;
  std::vector<double> scores;
  bool from_cache = false;
};

std::string StatusName(CellResult::Status s) {
  switch (s) {
    case CellResult::Status::kOk: return "ok";
    case CellResult::Status::kSkipped: return "skipped";
    case CellResult::Status::kFailed: return "failed";
  }
  return "failed";
}

double Score(Metric metric, std::span<const double> scores,
             std::span<const int> truth) {
  if (metric == Metric::kAuprc) return Auprc(scores, truth);
  const std::vector<int> predicted = PredictLabels(scores);
  const ConfusionMatrix cm = Confusion(predicted, truth);
  return metric == Metric::kGMean ? GMean(cm) : F1Score(cm);
}

CellResult ScoreCell(const Dataset& train, const Dataset& test,
                     const Oversampler& oversampler, const GridSpec& grid,
                     std::uint64_t seed) {
  CellResult cell;
  const std::size_t width = grid.classifiers.size() * grid.metrics.size();
  cell.scores.assign(width, kNaN);
  if (train.size() < oversampler.min_rows()) {
    cell.status = CellResult::Status::kSkipped;
    cell.message = "needs at least " + std::to_string(oversampler.min_rows()) +
                   " training rows, fold has " + std::to_string(train.size());
    return cell;
  }
  try {
    const Dataset balanced = oversampler.Resample(train, seed);
    auto record = [&](std::size_t c, const std::vector<double>& scores) {
      for (std::size_t m = 0; m < grid.metrics.size(); ++m) {
        cell.scores[c * grid.metrics.size() + m] =
            Score(grid.metrics[m], scores, test.labels());
      }
    };
    // KNN grid points share one neighbor search.
    std::vector<std::size_t> knn_slots;
    std::vector<int> knn_ks;
    for (std::size_t c = 0; c < grid.classifiers.size(); ++c) {
      const auto* knn =
          dynamic_cast<const KnnClassifier*>(grid.classifiers[c].get());
      if (knn) {
        knn_slots.push_back(c);
        knn_ks.push_back(knn->k());
        continue;
      }
      const auto model = grid.classifiers[c]->Fit(balanced);
      record(c, model->PredictScores(test.features()));
    }
    if (!knn_slots.empty()) {
      const auto scores = KnnScores(balanced, test.features(), knn_ks);
      for (std::size_t j = 0; j < knn_slots.size(); ++j) {
        record(knn_slots[j], scores[j]);
      }
    }
  } catch (const std::exception& e) {
    cell.status = CellResult::Status::kFailed;
    cell.message = e.what();
    std::fill(cell.scores.begin(), cell.scores.end(), kNaN);
  }
  return cell;
}

std::string CellKey(const std::string& dataset_hash, const Fold& fold,
                    const Oversampler& o, const std::string& grid_signature,
                    std::uint64_t seed) {
  return dataset_hash + "|" + std::to_string(fold.repeat) + "|" +
         std::to_string(fold.index) + "|" + o.method() + ":" + o.params() +
         "|" + grid_signature + "|" + Hex(seed);
}

bool LoadCell(const std::filesystem::path& path, const std::string& key,
              std::size_t width, CellResult& out) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return false;
  try {
    const Json j = Json::parse(ReadFile(path));
    if (j.at("key").get<std::string>() != key) return false;
    const std::string status = j.at("status").get<std::string>();
    CellResult cell;
    if (status == "ok") {
      cell.status = CellResult::Status::kOk;
    } else if (status == "skipped") {
      cell.status = CellResult::Status::kSkipped;
    } else {
      cell.status = CellResult::Status::kFailed;
    }
    cell.message = j.at("message").get<std::string>();
    const Json& scores = j.at("scores");
    if (scores.size() != width) return false;
    for (const Json& s : scores) {
      cell.scores.push_back(s.is_null() ? kNaN : s.get<double>());
    }
    cell.from_cache = true;
    out = std::move(cell);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void StoreCell(const std::filesystem::path& path, const std::string& key,
               const CellResult& cell) {
  Json j;
  j["key"] = key;
  j["status"] = StatusName(cell.status);
  j["message"] = cell.message;
  Json scores = Json::array();
  for (double s : cell.scores) scores.push_back(Number(s));
  j["scores"] = std::move(scores);
  WriteFileAtomic(path, j.dump() + "\n");
}

std::vector<std::shared_ptr<const Oversampler>> Wrap(
    std::vector<OversamplerSpec> specs) {
  std::vector<std::shared_ptr<const Oversampler>> out;
  out.reserve(specs.size());
  for (auto& s : specs) {
    out.push_back(std::make_shared<SpecOversampler>(std::move(s)));
  }
  return out;
}

}  // namespace

std::string MetricName(Metric metric) {
  switch (metric) {
    case Metric::kGMean: return "gmean";
    case Metric::kF1: return "f1";
    case Metric::kAuprc: return "auprc";
  }
  return "unknown";
}

Metric ParseMetric(std::string_view name) {
  for (Metric m : {Metric::kGMean, Metric::kF1, Metric::kAuprc}) {
    if (name == MetricName(m)) return m;
  }
  throw InputError("unknown metric '" + std::string(name) +
                   "' (expected gmean, f1 or auprc)");
}

Dataset SpecOversampler::Resample(const Dataset& train,
                                  std::uint64_t seed) const {
  if (spec_.method == OversamplerMethod::kNone) return train;
  return kmsmote::Resample(train, spec_, seed).dataset;
}

std::size_t SpecOversampler::min_rows() const {
  return spec_.method == OversamplerMethod::kKMeansSmote
             ? static_cast<std::size_t>(std::max(spec_.k, 0))
             : 0;
}

std::vector<std::shared_ptr<const Oversampler>> ExpandOversamplerGrid(
    OversamplerMethod method, const std::vector<int>& kms_k) {
  std::vector<OversamplerSpec> specs;
  auto point = [&](int k, int knn, double irt, std::optional<double> de) {
    OversamplerSpec s;
    s.method = method;
    s.k = k;
    s.knn = knn;
    s.irt = irt;
    s.de = de;
    specs.push_back(s);
  };
  const std::vector<int> knns = {3, 5, 20};
  switch (method) {
    case OversamplerMethod::kNone:
    case OversamplerMethod::kRandom:
      point(2, 5, 1.0, std::nullopt);
      break;
    case OversamplerMethod::kSmote:
    case OversamplerMethod::kBorderline1:
    case OversamplerMethod::kBorderline2:
      for (int knn : knns) point(2, knn, 1.0, std::nullopt);
      break;
    case OversamplerMethod::kKMeansSmote:
      for (int k : kms_k) {
        for (int knn : {3, 5, 20, kAllNeighbors}) {
          for (double irt : {1.0, kInfiniteIrt}) {
            for (std::optional<double> de :
                 {std::optional<double>(0.0), std::optional<double>(2.0),
                  std::optional<double>()}) {
              point(k, knn, irt, de);
            }
          }
        }
      }
      break;
  }
  return Wrap(std::move(specs));
}

GridSpec GridSpec::Full(std::vector<int> kms_k) {
  GridSpec grid;
  for (OversamplerMethod m :
       {OversamplerMethod::kNone, OversamplerMethod::kRandom,
        OversamplerMethod::kSmote, OversamplerMethod::kBorderline1,
        OversamplerMethod::kBorderline2, OversamplerMethod::kKMeansSmote}) {
    auto points = ExpandOversamplerGrid(m, kms_k);
    grid.oversamplers.insert(grid.oversamplers.end(), points.begin(),
                             points.end());
  }
  for (int k : {3, 5, 8}) {
    grid.classifiers.push_back(std::make_shared<KnnClassifier>(k));
  }
  grid.classifiers.push_back(std::make_shared<LogRegClassifier>());
  return grid;
}

GridSpec GridSpec::DeskScale() { return Full({2, 20, 50}); }

void GridSpec::Validate() const {
  if (oversamplers.empty()) throw InputError("oversampler grid is empty");
  if (classifiers.empty()) throw InputError("classifier grid is empty");
  if (metrics.empty()) throw InputError("metric list is empty");
  const bool has_none =
      std::any_of(oversamplers.begin(), oversamplers.end(),
                  [](const auto& o) { return o->method() == "none"; });
  if (!has_none) {
    throw InputError("oversampler grid must include the 'none' baseline");
  }
  for (const auto& o : oversamplers) {
    if (!o) throw InputError("null oversampler in grid");
  }
  for (const auto& c : classifiers) {
    if (!c) throw InputError("null classifier in grid");
  }
}

EvalReport RunExperiment(const std::vector<Dataset>& datasets,
                         const GridSpec& grid,
                         const ExperimentOptions& options) {
  grid.Validate();
  if (datasets.empty()) throw InputError("no datasets to evaluate");
  const std::size_t num_metrics = grid.metrics.size();
  const std::size_t width = grid.classifiers.size() * num_metrics;

  EvalReport report;
  report.folds = options.folds;
  report.repeats = options.repeats;
  report.seed = options.seed;
  for (const auto& o : grid.oversamplers) {
    report.oversampler_grid.push_back(o->method() + ":" + o->params());
  }
  for (const auto& c : grid.classifiers) {
    report.classifier_grid.push_back(c->name() + ":" + c->params());
  }
  for (Metric m : grid.metrics) report.metrics.push_back(MetricName(m));

  std::string grid_signature;
  for (const auto& c : report.classifier_grid) grid_signature += c + ";";
  for (const auto& m : report.metrics) grid_signature += m + ";";

  // Fold plans and splits per dataset.
  struct Split {
    Fold fold;
    Dataset train;
    Dataset test;
  };
  std::vector<std::vector<Split>> splits(datasets.size());
  std::vector<std::string> dataset_hashes;
  {
    std::map<std::string, int> seen;
    for (const Dataset& d : datasets) {
      if (seen[d.name()]++ > 0) {
        throw InputError("duplicate dataset name '" + d.name() + "'");
      }
    }
  }
  for (std::size_t di = 0; di < datasets.size(); ++di) {
    const Dataset& d = datasets[di];
    report.dataset_metadata.push_back(DatasetMetadataJson(d));
    dataset_hashes.push_back(Hex(HashString(FormatCsv(d))));
    const FoldPlan plan = StratifiedKFold(
        d, options.folds, options.repeats,
        DeriveSeed(options.seed, {streams::kFolds, HashString(d.name())}));
    for (const Fold& f : plan.folds) {
      splits[di].push_back({f, d.Subset(f.train), d.Subset(f.test)});
    }
  }

  const std::size_t num_o = grid.oversamplers.size();
  const std::size_t per_dataset = splits.empty() ? 0 : num_o;
  std::vector<std::size_t> offsets(datasets.size() + 1, 0);
  for (std::size_t di = 0; di < datasets.size(); ++di) {
    offsets[di + 1] = offsets[di] + splits[di].size() * per_dataset;
  }
  const std::size_t total = offsets.back();
  std::vector<CellResult> cells(total);

  ParallelFor(total, std::max(options.jobs, 1), [&](std::size_t t) {
    const std::size_t di = static_cast<std::size_t>(
        std::upper_bound(offsets.begin(), offsets.end(), t) - offsets.begin() -
        1);
    const std::size_t local = t - offsets[di];
    const Split& split = splits[di][local / num_o];
    const Oversampler& o = *grid.oversamplers[local % num_o];
    const std::uint64_t seed = DeriveSeed(
        options.seed,
        {streams::kResample, HashString(datasets[di].name()),
         static_cast<std::uint64_t>(split.fold.repeat),
         static_cast<std::uint64_t>(split.fold.index),
         HashString(o.method() + ":" + o.params())});
    std::filesystem::path path;
    std::string key;
    if (!options.cache_dir.empty()) {
      key = CellKey(dataset_hashes[di], split.fold, o, grid_signature, seed);
      path = options.cache_dir / datasets[di].name() /
             (Hex(HashString(key)) + ".json");
      if (LoadCell(path, key, width, cells[t])) return;
    }
    cells[t] = ScoreCell(split.train, split.test, o, grid, seed);
    if (!path.empty()) StoreCell(path, key, cells[t]);
  });

  report.cells_total = total;
  for (const CellResult& c : cells) report.cells_from_cache += c.from_cache;

  // Per grid point aggregation.
  for (std::size_t di = 0; di < datasets.size(); ++di) {
    const std::string& name = datasets[di].name();
    const std::size_t num_folds = splits[di].size();
    for (std::size_t oi = 0; oi < num_o; ++oi) {
      const Oversampler& o = *grid.oversamplers[oi];
      std::size_t skipped = 0, failed = 0;
      std::string first_message;
      for (std::size_t f = 0; f < num_folds; ++f) {
        const CellResult& c = cells[offsets[di] + f * num_o + oi];
        if (c.status == CellResult::Status::kOk) continue;
        if (first_message.empty()) first_message = c.message;
        (c.status == CellResult::Status::kSkipped ? skipped : failed)++;
      }
      std::string status = "ok";
      const std::string label = name + " " + o.method() +
                                (o.params().empty() ? "" : ":" + o.params());
      if (skipped > 0) {
        status = "skipped";
        report.skipped.push_back(label + ": " + first_message);
      } else if (failed > 0) {
        status = "failed";
        report.failures.push_back(label + ": failed on " +
                                  std::to_string(failed) + "/" +
                                  std::to_string(num_folds) +
                                  " folds: " + first_message);
      }
      for (std::size_t ci = 0; ci < grid.classifiers.size(); ++ci) {
        for (std::size_t mi = 0; mi < num_metrics; ++mi) {
          GridPointScore g;
          g.dataset = name;
          g.method = o.method();
          g.oversampler_params = o.params();
          g.classifier = grid.classifiers[ci]->name();
          g.classifier_params = grid.classifiers[ci]->params();
          g.metric = grid.metrics[mi];
          g.status = status;
          std::vector<std::vector<double>> by_repeat(options.repeats);
          for (std::size_t f = 0; f < num_folds; ++f) {
            const double s =
                cells[offsets[di] + f * num_o + oi].scores[ci * num_metrics + mi];
            g.fold_scores.push_back(s);
            by_repeat[splits[di][f].fold.repeat].push_back(s);
          }
          if (status == "ok") {
            g.mean = Mean(g.fold_scores);
            g.std = SampleStd(g.fold_scores);
            for (const auto& r : by_repeat) g.repeat_means.push_back(Mean(r));
          } else {
            g.mean = kNaN;
            g.std = kNaN;
            g.repeat_means.assign(options.repeats, kNaN);
          }
          report.grid.push_back(std::move(g));
        }
      }
    }
  }

  // Best over grid per (dataset, classifier family, metric, method).
  std::vector<std::string> families, methods;
  for (const auto& c : grid.classifiers) {
    if (std::find(families.begin(), families.end(), c->name()) ==
        families.end()) {
      families.push_back(c->name());
    }
  }
  for (const auto& o : grid.oversamplers) {
    if (std::find(methods.begin(), methods.end(), o->method()) ==
        methods.end()) {
      methods.push_back(o->method());
    }
  }
  for (const Dataset& d : datasets) {
    for (const std::string& family : families) {
      for (Metric metric : grid.metrics) {
        for (const std::string& method : methods) {
          BestScore best;
          best.dataset = d.name();
          best.classifier = family;
          best.metric = metric;
          best.method = method;
          const GridPointScore* arg = nullptr;
          for (const GridPointScore& g : report.grid) {
            if (g.dataset != d.name() || g.classifier != family ||
                g.metric != metric || g.method != method || g.status != "ok") {
              continue;
            }
            if (!arg || g.mean > arg->mean) arg = &g;
          }
          if (arg) {
            best.valid = true;
            best.oversampler_params = arg->oversampler_params;
            best.classifier_params = arg->classifier_params;
            best.mean = arg->mean;
            best.std = arg->std;
            best.repeat_scores = arg->repeat_means;
          } else {
            best.mean = kNaN;
            best.std = kNaN;
            best.repeat_scores.assign(options.repeats, kNaN);
          }
          report.best.push_back(std::move(best));
        }
      }
    }
  }

  report.rankings = RankMethods(CollectRepeatScores(report), methods);
  return report;
}

std::vector<RepeatScore> CollectRepeatScores(const EvalReport& report) {
  std::vector<RepeatScore> out;
  for (const BestScore& b : report.best) {
    for (std::size_t r = 0; r < b.repeat_scores.size(); ++r) {
      out.push_back({b.dataset, b.classifier, MetricName(b.metric), b.method,
                     static_cast<int>(r), b.repeat_scores[r]});
    }
  }
  return out;
}

std::vector<RankingResult> RankMethods(
    const std::vector<RepeatScore>& scores,
    const std::vector<std::string>& method_order) {
  using Group = std::pair<std::string, std::string>;
  using Block = std::pair<std::string, int>;
  std::vector<Group> groups;
  std::map<Group, std::vector<const RepeatScore*>> by_group;
  for (const RepeatScore& s : scores) {
    Group g{s.classifier, s.metric};
    if (!by_group.count(g)) groups.push_back(g);
    by_group[g].push_back(&s);
  }

  std::vector<RankingResult> out;
  for (const Group& g : groups) {
    const auto& rows = by_group[g];
    RankingResult result;
    result.classifier = g.first;
    result.metric = g.second;
    for (const std::string& m : method_order) {
      const bool present = std::any_of(
          rows.begin(), rows.end(), [&](const auto* s) { return s->method == m; });
      if (present) result.methods.push_back(m);
    }
    std::vector<Block> blocks;
    std::map<Block, std::size_t> block_index;
    for (const RepeatScore* s : rows) {
      if (std::find(result.methods.begin(), result.methods.end(), s->method) ==
          result.methods.end()) {
        result.methods.push_back(s->method);
      }
      Block b{s->dataset, s->repeat};
      if (!block_index.count(b)) {
        block_index.emplace(b, blocks.size());
        blocks.push_back(b);
      }
    }
    const std::size_t k = result.methods.size();
    std::vector<std::vector<double>> table(blocks.size(),
                                           std::vector<double>(k, kNaN));
    for (const RepeatScore* s : rows) {
      const std::size_t j = static_cast<std::size_t>(
          std::find(result.methods.begin(), result.methods.end(), s->method) -
          result.methods.begin());
      table[block_index[{s->dataset, s->repeat}]][j] = s->score;
    }
    result.blocks = blocks.size();
    if (k >= 2 && !blocks.empty()) {
      std::vector<std::vector<double>> ranks;
      ranks.reserve(blocks.size());
      for (const auto& row : table) ranks.push_back(AverageRanks(row));
      result.mean_ranks.assign(k, 0.0);
      for (const auto& row : ranks) {
        for (std::size_t j = 0; j < k; ++j) result.mean_ranks[j] += row[j];
      }
      for (double& r : result.mean_ranks) {
        r /= static_cast<double>(blocks.size());
      }
      if (k >= 3 && blocks.size() >= 2) {
        result.friedman = FriedmanTest(ranks);
        result.friedman_valid = true;
      }
    } else {
      result.mean_ranks.assign(k, k == 1 ? 1.0 : kNaN);
    }
    out.push_back(std::move(result));
  }
  return out;
}

std::string FormatRepeatScoresCsv(const std::vector<RepeatScore>& scores) {
  std::ostringstream out;
  out << "dataset,classifier,metric,method,repeat,score\n";
  for (const RepeatScore& s : scores) {
    out << CsvField(s.dataset) << ',' << CsvField(s.classifier) << ','
        << s.metric << ',' << CsvField(s.method) << ',' << s.repeat << ','
        << FormatDouble(s.score) << '\n';
  }
  return out.str();
}

std::vector<RepeatScore> ParseRepeatScoresCsv(std::string_view text) {
  std::vector<RepeatScore> out;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string> fields = SplitCsvLine(line);
    if (header.empty()) {
      header = std::move(fields);
      const std::vector<std::string> expected = {
          "dataset", "classifier", "metric", "method", "repeat", "score"};
      if (header != expected) {
        throw InputError("repeat scores: line 1: expected header "
                         "dataset,classifier,metric,method,repeat,score");
      }
      continue;
    }
    if (fields.size() != 6) {
      throw InputError("repeat scores: line " + std::to_string(line_no) +
                       ": expected 6 fields, got " +
                       std::to_string(fields.size()));
    }
    RepeatScore s;
    s.dataset = fields[0];
    s.classifier = fields[1];
    s.metric = fields[2];
    s.method = fields[3];
    double repeat = 0.0;
    if (!ParseDouble(fields[4], repeat) || repeat < 0 ||
        repeat != std::floor(repeat)) {
      throw InputError("repeat scores: line " + std::to_string(line_no) +
                       ", column 5: bad repeat '" + fields[4] + "'");
    }
    s.repeat = static_cast<int>(repeat);
    if (fields[5] == "nan" || fields[5].empty()) {
      s.score = kNaN;
    } else if (!ParseDouble(fields[5], s.score)) {
      throw InputError("repeat scores: line " + std::to_string(line_no) +
                       ", column 6: bad score '" + fields[5] + "'");
    }
    out.push_back(std::move(s));
  }
  if (header.empty()) throw InputError("repeat scores: empty file");
  return out;
}

std::string FormatRanksCsv(const std::vector<RankingResult>& rankings) {
  std::vector<std::string> methods;
  for (const RankingResult& r : rankings) {
    for (const std::string& m : r.methods) {
      if (std::find(methods.begin(), methods.end(), m) == methods.end()) {
        methods.push_back(m);
      }
    }
  }
  std::ostringstream out;
  out << "method";
  for (const RankingResult& r : rankings) {
    out << ',' << CsvField(r.classifier + "/" + r.metric);
  }
  out << '\n';
  for (const std::string& m : methods) {
    out << CsvField(m);
    for (const RankingResult& r : rankings) {
      out << ',';
      auto it = std::find(r.methods.begin(), r.methods.end(), m);
      if (it != r.methods.end()) {
        out << FormatDouble(r.mean_ranks[it - r.methods.begin()]);
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string FormatFriedmanCsv(const std::vector<RankingResult>& rankings) {
  std::ostringstream out;
  out << "classifier,metric,methods,blocks,statistic,p_value,reject\n";
  for (const RankingResult& r : rankings) {
    out << CsvField(r.classifier) << ',' << r.metric << ','
        << r.methods.size() << ',' << r.blocks << ',';
    if (r.friedman_valid) {
      out << FormatDouble(r.friedman.statistic) << ','
          << FormatDouble(r.friedman.p_value) << ','
          << (r.friedman.reject ? "true" : "false");
    } else {
      out << ",,";
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::string FormatGridCsv(const EvalReport& report) {
  std::ostringstream out;
  out << "dataset,method,oversampler_params,classifier,classifier_params,"
         "metric,status,mean,std\n";
  for (const GridPointScore& g : report.grid) {
    out << CsvField(g.dataset) << ',' << CsvField(g.method) << ','
        << CsvField(g.oversampler_params) << ',' << CsvField(g.classifier)
        << ',' << CsvField(g.classifier_params) << ',' << MetricName(g.metric)
        << ',' << g.status << ',' << FormatDouble(g.mean) << ','
        << FormatDouble(g.std) << '\n';
  }
  return out.str();
}

std::string FormatFoldCsv(const EvalReport& report) {
  std::ostringstream out;
  out << "dataset,method,oversampler_params,classifier,classifier_params,"
         "metric,repeat,fold,score\n";
  for (const GridPointScore& g : report.grid) {
    const std::size_t folds = static_cast<std::size_t>(report.folds);
    for (std::size_t i = 0; i < g.fold_scores.size(); ++i) {
      out << CsvField(g.dataset) << ',' << CsvField(g.method) << ','
          << CsvField(g.oversampler_params) << ',' << CsvField(g.classifier)
          << ',' << CsvField(g.classifier_params) << ','
          << MetricName(g.metric) << ',' << i / folds << ',' << i % folds
          << ',' << FormatDouble(g.fold_scores[i]) << '\n';
    }
  }
  return out.str();
}

std::string FormatReportJson(const EvalReport& report) {
  Json j;
  j["folds"] = report.folds;
  j["repeats"] = report.repeats;
  j["seed"] = report.seed;
  Json datasets = Json::array();
  for (const std::string& m : report.dataset_metadata) {
    datasets.push_back(Json::parse(m));
  }
  j["datasets"] = std::move(datasets);
  j["oversamplerGrid"] = report.oversampler_grid;
  j["classifierGrid"] = report.classifier_grid;
  j["metrics"] = report.metrics;
  Json best = Json::array();
  for (const BestScore& b : report.best) {
    Json e;
    e["dataset"] = b.dataset;
    e["classifier"] = b.classifier;
    e["metric"] = MetricName(b.metric);
    e["method"] = b.method;
    e["valid"] = b.valid;
    e["oversamplerParams"] = b.oversampler_params;
    e["classifierParams"] = b.classifier_params;
    e["mean"] = Number(b.mean);
    e["std"] = Number(b.std);
    Json reps = Json::array();
    for (double s : b.repeat_scores) reps.push_back(Number(s));
    e["repeatScores"] = std::move(reps);
    best.push_back(std::move(e));
  }
  j["best"] = std::move(best);
  Json rankings = Json::array();
  for (const RankingResult& r : report.rankings) {
    Json e;
    e["classifier"] = r.classifier;
    e["metric"] = r.metric;
    e["blocks"] = r.blocks;
    Json ranks = Json::object();
    for (std::size_t i = 0; i < r.methods.size(); ++i) {
      ranks[r.methods[i]] = Number(r.mean_ranks[i]);
    }
    e["meanRanks"] = std::move(ranks);
    if (r.friedman_valid) {
      e["friedmanStatistic"] = Number(r.friedman.statistic);
      e["pValue"] = Number(r.friedman.p_value);
      e["reject"] = r.friedman.reject;
    } else {
      e["friedmanStatistic"] = nullptr;
      e["pValue"] = nullptr;
      e["reject"] = nullptr;
    }
    rankings.push_back(std::move(e));
  }
  j["rankings"] = std::move(rankings);
  j["skipped"] = report.skipped;
  j["failures"] = report.failures;
  return j.dump(2) + "\n";
}

}  // namespace

void WriteReport(const EvalReport& report, const std::filesystem::path& dir) {
  WriteFileAtomic(dir / "report.json", FormatReportJson(report));
  WriteFileAtomic(dir / "grid_scores.csv", FormatGridCsv(report));
  WriteFileAtomic(dir / "fold_scores.csv", FormatFoldCsv(report));
  WriteFileAtomic(dir / "repeat_scores.csv",
                  FormatRepeatScoresCsv(CollectRepeatScores(report)));
  WriteFileAtomic(dir / "ranks.csv", FormatRanksCsv(report.rankings));
  WriteFileAtomic(dir / "friedman.csv", FormatFriedmanCsv(report.rankings));
}

}  // namespace kmsmote
