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


#include "cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kmsmote/classifiers.h"
#include "kmsmote/data.h"
#include "kmsmote/error.h"
#include "kmsmote/eval.h"
#include "kmsmote/io.h"
#include "kmsmote/oversampler_spec.h"
#include "kmsmote/parallel.h"

namespace kmsmote::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct OversampleArgs {
  std::string input;
  std::string out;
  std::string label;
  std::string minority_label;
  bool one_vs_rest = false;
  std::string method = "kmeans-smote";
  int k = 2;
  std::string irt = "1";
  std::string knn = "5";
  std::string de = "auto";
  std::optional<std::size_t> n;
  std::optional<int> m_neighbors;
  std::uint64_t seed = 0;
  bool fallback_smote = false;
};

struct EvaluateArgs {
  std::vector<std::string> data;
  std::string label;
  bool one_vs_rest = false;
  std::string grid = "desk";
  std::vector<std::string> methods;
  std::vector<int> kms_k;
  std::vector<std::string> classifiers;
  std::vector<std::string> metrics;
  int folds = 5;
  int repeats = 5;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string cache;
  std::string out;
};

struct RankArgs {
  std::string scores;
  std::string out;
};

struct VariantsArgs {
  std::string input;
  std::string label;
  std::string minority_label;
  bool one_vs_rest = false;
  std::vector<double> factors = {2, 4, 6, 10, 15, 20};
  std::uint64_t seed = 0;
  std::string out;
};

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Flat "key = value" file; '#' starts a comment. Keys are flag names with
// or without the leading dashes.
std::vector<std::pair<std::string, std::string>> ParseConfigFile(
    const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(line_no) +
                       ": expected key = value");
    }
    std::string key = Trim(std::string_view(line).substr(0, eq));
    std::string value = Trim(std::string_view(line).substr(eq + 1));
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
        value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) {
      throw InputError("config line " + std::to_string(line_no) +
                       ": empty key");
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

bool IsTrue(const std::string& v) {
  return v == "true" || v == "1" || v == "yes" || v == "on";
}

// Splices config-file settings in right after the subcommand token, skipping
// keys already given on the command line so flags win over the file.
std::vector<std::string> MergeConfig(std::vector<std::string> args,
                                     const std::vector<std::string>& commands,
                                     const std::vector<std::string>& flags,
                                     std::string& config_text) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return args;
  config_text = ReadFile(*path);
  const auto entries = ParseConfigFile(config_text);
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> extra;
  for (const auto& [key, value] : entries) {
    if (key == "config" || given(key)) continue;
    if (std::find(flags.begin(), flags.end(), key) != flags.end()) {
      if (IsTrue(value)) extra.push_back("--" + key);
      continue;
    }
    extra.push_back("--" + key + "=" + value);
  }
  auto cmd = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return std::find(commands.begin(), commands.end(), a) != commands.end();
  });
  if (cmd == args.end()) return args;
  args.insert(cmd + 1, extra.begin(), extra.end());
  return args;
}

Json ConfigEcho(const CLI::App& sub) {
  Json j = Json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "config") continue;
    if (opt->count() > 0) {
      const auto& results = opt->results();
      if (opt->get_expected_max() > 1 || results.size() > 1) {
        j[name] = results;
      } else if (opt->get_expected_min() == 0) {
        j[name] = true;
      } else {
        j[name] = results.empty() ? std::string() : results.front();
      }
    } else if (opt->get_expected_min() == 0) {
      j[name] = false;
    } else {
      const std::string def = opt->get_default_str();
      if (def.empty()) {
        j[name] = nullptr;
      } else {
        j[name] = def;
      }
    }
  }
  return j;
}

CsvOptions MakeCsvOptions(const std::string& label,
                          const std::string& minority_label, bool one_vs_rest) {
  CsvOptions options;
  if (!label.empty()) options.label_column = label;
  if (!minority_label.empty()) options.minority_label = minority_label;
  options.one_vs_rest = one_vs_rest;
  return options;
}

Json ClustersJson(const std::vector<FilteredCluster>& clusters) {
  Json out = Json::array();
  for (const FilteredCluster& c : clusters) {
    Json e;
    e["cluster"] = c.cluster_id;
    e["minority"] = c.minority_idx.size();
    e["majority"] = c.majority_idx.size();
    e["imbalanceRatio"] = c.imbalance_ratio;
    e["averageMinorityDistance"] = c.avg_minority_distance;
    e["samplingWeight"] = c.sampling_weight;
    e["quota"] = c.quota;
    out.push_back(std::move(e));
  }
  return out;
}

int RunOversample(const OversampleArgs& a, const CLI::App& sub,
                  const std::string& config_text, std::ostream& out,
                  std::ostream& err) {
  const Dataset input = LoadCsv(
      a.input, MakeCsvOptions(a.label, a.minority_label, a.one_vs_rest));
  OversamplerSpec spec;
  spec.method = ParseMethod(a.method);
  spec.k = a.k;
  spec.irt = ParseIrt(a.irt);
  spec.knn = ParseKnn(a.knn);
  spec.de = ParseDe(a.de);
  spec.n = a.n;
  spec.m_neighbors = a.m_neighbors;
  spec.fallback_to_smote = a.fallback_smote;

  const ResampleResult result = Resample(input, spec, a.seed);
  const fs::path dir(a.out);
  WriteCsv(result.dataset, dir / "balanced.csv");
  WriteBatchCsv(input, result.batch, dir / "provenance.csv");

  Json summary;
  summary["command"] = "oversample";
  summary["config"] = ConfigEcho(sub);
  summary["configFile"] =
      config_text.empty() ? Json(nullptr) : Json(config_text);
  summary["method"] = MethodName(spec.method);
  summary["params"] = spec.Describe();
  summary["seed"] = a.seed;
  summary["input"] = Json::parse(DatasetMetadataJson(input));
  summary["output"] = Json::parse(DatasetMetadataJson(result.dataset));
  summary["generated"] = result.batch.size();
  summary["clusters"] = ClustersJson(result.clusters);
  summary["warnings"] = result.batch.warnings;
  WriteFileAtomic(dir / "summary.json", summary.dump(2) + "\n");

  for (const std::string& w : result.batch.warnings) {
    err << "warning: " << w << "\n";
  }
  out << "generated " << result.batch.size() << " samples; wrote "
      << result.dataset.size() << " rows to " << (dir / "balanced.csv").string()
      << "\n";
  return kExitOk;
}

GridSpec BuildGrid(const EvaluateArgs& a) {
  GridSpec base;
  if (!a.kms_k.empty()) {
    base = GridSpec::Full(a.kms_k);
  } else if (a.grid == "full") {
    base = GridSpec::Full();
  } else if (a.grid == "desk") {
    base = GridSpec::DeskScale();
  } else {
    throw InputError("unknown grid '" + a.grid + "' (expected desk or full)");
  }
  GridSpec grid;
  if (a.methods.empty()) {
    grid.oversamplers = base.oversamplers;
  } else {
    for (const std::string& m : a.methods) ParseMethod(m);
    for (const auto& o : base.oversamplers) {
      if (std::find(a.methods.begin(), a.methods.end(), o->method()) !=
          a.methods.end()) {
        grid.oversamplers.push_back(o);
      }
    }
  }
  if (a.classifiers.empty()) {
    grid.classifiers = base.classifiers;
  } else {
    for (const std::string& c : a.classifiers) {
      if (c == "lr") {
        grid.classifiers.push_back(std::make_shared<LogRegClassifier>());
      } else if (c == "knn") {
        for (int k : {3, 5, 8}) {
          grid.classifiers.push_back(std::make_shared<KnnClassifier>(k));
        }
      } else if (c.rfind("knn:", 0) == 0) {
        double k = 0.0;
        if (!ParseDouble(c.substr(4), k) || k < 1 || k != std::floor(k)) {
          throw InputError("bad classifier '" + c + "'");
        }
        grid.classifiers.push_back(
            std::make_shared<KnnClassifier>(static_cast<int>(k)));
      } else {
        throw InputError("unknown classifier '" + c +
                         "' (expected knn, knn:K or lr)");
      }
    }
  }
  if (!a.metrics.empty()) {
    grid.metrics.clear();
    for (const std::string& m : a.metrics) grid.metrics.push_back(ParseMetric(m));
  }
  grid.Validate();
  return grid;
}

int RunEvaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Dataset> datasets;
  for (const std::string& path : a.data) {
    datasets.push_back(
        LoadCsv(path, MakeCsvOptions(a.label, "", a.one_vs_rest)));
  }
  const GridSpec grid = BuildGrid(a);
  ExperimentOptions options;
  options.folds = a.folds;
  options.repeats = a.repeats;
  options.seed = a.seed;
  options.jobs = a.jobs > 0 ? a.jobs : DefaultWorkers();
  if (!a.cache.empty()) options.cache_dir = a.cache;

  const EvalReport report = RunExperiment(datasets, grid, options);
  WriteReport(report, a.out);

  out << "evaluated " << report.cells_total << " cells ("
      << report.cells_from_cache << " from cache); " << report.skipped.size()
      << " grid points skipped, " << report.failures.size()
      << " with failures\n";
  for (const std::string& f : report.failures) err << "failed: " << f << "\n";
  const bool any_ok = std::any_of(report.grid.begin(), report.grid.end(),
                                  [](const auto& g) { return g.status == "ok"; });
  if (!any_ok) {
    err << "error: every grid point failed or was skipped\n";
    return kExitInternal;
  }
  return kExitOk;
}

int RunRank(const RankArgs& a, std::ostream& out) {
  const auto scores = ParseRepeatScoresCsv(ReadFile(a.scores));
  const auto rankings = RankMethods(scores);
  const fs::path dir(a.out);
  WriteFileAtomic(dir / "ranks.csv", FormatRanksCsv(rankings));
  WriteFileAtomic(dir / "friedman.csv", FormatFriedmanCsv(rankings));
  out << "ranked " << rankings.size() << " classifier/metric pairs\n";
  return kExitOk;
}

int RunVariants(const VariantsArgs& a, std::ostream& out, std::ostream& err) {
  const Dataset input = LoadCsv(
      a.input, MakeCsvOptions(a.label, a.minority_label, a.one_vs_rest));
  const fs::path dir(a.out);
  for (double factor : a.factors) {
    if (!(factor > 1.0) || !std::isfinite(factor)) {
      throw InputError("variant factor must be > 1, got " +
                       FormatDouble(factor));
    }
    auto variant = MakeUndersampledVariant(input, factor, a.seed);
    if (!variant) {
      const long kept = std::lround(
          static_cast<double>(input.minority_count()) / factor);
      err << "skipped factor " << FormatDouble(factor) << ": minority would "
          << "drop to " << kept << " < " << kMinVariantMinority << "\n";
      continue;
    }
    const fs::path path = dir / (variant->name() + ".csv");
    WriteCsv(*variant, path);
    out << "wrote " << path.string() << " (" << variant->minority_count()
        << " minority, " << variant->majority_count() << " majority)\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"k-means SMOTE oversampling and evaluation"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "Flat key = value config file");

  OversampleArgs os;
  CLI::App* oversample =
      app.add_subcommand("oversample", "Rebalance one dataset");
  oversample->add_option("--input", os.input, "Input CSV")->required();
  oversample->add_option("--out", os.out, "Output directory")->required();
  oversample->add_option("--label", os.label, "Label column (default: last)");
  oversample->add_option("--minority-label", os.minority_label,
                         "Label value treated as minority");
  oversample->add_flag("--one-vs-rest", os.one_vs_rest,
                       "Smallest of several classes against the rest");
  oversample->add_option("--method", os.method, "Oversampling method")
      ->capture_default_str();
  oversample->add_option("--k", os.k, "Number of clusters")
      ->capture_default_str();
  oversample->add_option("--irt", os.irt, "Imbalance ratio threshold or inf")
      ->capture_default_str();
  oversample->add_option("--knn", os.knn, "SMOTE neighbors or all")
      ->capture_default_str();
  oversample->add_option("--de", os.de, "Density exponent or auto")
      ->capture_default_str();
  oversample->add_option("--n", os.n, "Samples to generate");
  oversample->add_option("--m-neighbors", os.m_neighbors,
                         "Borderline neighborhood size");
  oversample->add_option("--seed", os.seed, "Random seed")
      ->capture_default_str();
  oversample->add_flag("--fallback-smote", os.fallback_smote,
                       "Plain SMOTE when no cluster passes the filter");
  oversample->add_option("--config", config_path, "Config file");

  EvaluateArgs ev;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Cross-validated comparison of oversamplers");
  evaluate->add_option("--data", ev.data, "Dataset CSVs")
      ->required()
      ->delimiter(',');
  evaluate->add_option("--label", ev.label, "Label column (default: last)");
  evaluate->add_flag("--one-vs-rest", ev.one_vs_rest,
                     "Smallest of several classes against the rest");
  evaluate->add_option("--grid", ev.grid, "desk or full")
      ->capture_default_str();
  evaluate->add_option("--methods", ev.methods, "Restrict to these methods")
      ->delimiter(',');
  evaluate->add_option("--kms-k", ev.kms_k, "k-means SMOTE cluster counts")
      ->delimiter(',');
  evaluate->add_option("--classifiers", ev.classifiers, "knn, knn:K, lr")
      ->delimiter(',');
  evaluate->add_option("--metrics", ev.metrics, "gmean, f1, auprc")
      ->delimiter(',');
  evaluate->add_option("--folds", ev.folds)->capture_default_str();
  evaluate->add_option("--repeats", ev.repeats)->capture_default_str();
  evaluate->add_option("--seed", ev.seed)->capture_default_str();
  evaluate->add_option("--jobs", ev.jobs, "Worker threads (0: all cores)")
      ->capture_default_str();
  evaluate->add_option("--cache", ev.cache, "Per-cell cache directory");
  evaluate->add_option("--out", ev.out, "Report directory")->required();
  evaluate->add_option("--config", config_path, "Config file");

  RankArgs rk;
  CLI::App* rank =
      app.add_subcommand("rank", "Mean ranks and Friedman test from scores");
  rank->add_option("--scores", rk.scores, "repeat_scores.csv")->required();
  rank->add_option("--out", rk.out, "Output directory")->required();
  rank->add_option("--config", config_path, "Config file");

  VariantsArgs va;
  CLI::App* variants =
      app.add_subcommand("variants", "Undersampled higher-imbalance copies");
  variants->add_option("--input", va.input, "Input CSV")->required();
  variants->add_option("--label", va.label, "Label column (default: last)");
  variants->add_option("--minority-label", va.minority_label,
                       "Label value treated as minority");
  variants->add_flag("--one-vs-rest", va.one_vs_rest,
                     "Smallest of several classes against the rest");
  variants->add_option("--factors", va.factors, "Imbalance multipliers")
      ->delimiter(',');
  variants->add_option("--seed", va.seed)->capture_default_str();
  variants->add_option("--out", va.out, "Output directory")->required();
  variants->add_option("--config", config_path, "Config file");

  std::string config_text;
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = MergeConfig(std::move(args),
                       {"oversample", "evaluate", "rank", "variants"},
                       {"one-vs-rest", "fallback-smote"}, config_text);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*oversample) return RunOversample(os, *oversample, config_text, out, err);
    if (*evaluate) return RunEvaluate(ev, out, err);
    if (*rank) return RunRank(rk, out);
    if (*variants) return RunVariants(va, out, err);
    return kExitInput;
  } catch (const NoMinorityClusterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoMinorityCluster;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace kmsmote::cli
