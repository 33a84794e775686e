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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Usage: kmsmote_acceptance [output_dir]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "kmsmote/classifiers.h"
#include "kmsmote/data.h"
#include "kmsmote/error.h"
#include "kmsmote/eval.h"
#include "kmsmote/io.h"
#include "kmsmote/kmeans_smote.h"
#include "kmsmote/metrics.h"
#include "kmsmote/oversampler_spec.h"
#include "kmsmote/oversamplers.h"
#include "kmsmote/random.h"
#include "kmsmote/stats.h"
#include "oracles.h"

namespace kmsmote {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::vector<Dataset> Fixtures() {
  return {fixtures::Ecoli(), MakeBlobs(25, 400, 2, 2.0, 1),
          fixtures::PlantedOutlier()};
}

Outcome LimitCases() {
  const auto start = Clock::now();
  int identical = 0, copies = 0, runs = 0;
  for (const Dataset& d : Fixtures()) {
    const std::size_t n = DefaultTargetCount(d);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ++runs;
      KmsParams p;
      p.k = 1;
      p.irt = kInfiniteIrt;
      p.knn = 5;
      p.seed = seed;
      const SyntheticBatch kms = KMeansSmote(d, p).batch;
      const SyntheticBatch smote = Smote(d, n, 5, seed);
      if (kms.samples == smote.samples && kms.parents == smote.parents &&
          kms.weights == smote.weights) {
        ++identical;
      }
      p.knn = 0;
      const SyntheticBatch dup = KMeansSmote(d, p).batch;
      bool all_copies = dup.size() == n;
      for (std::size_t i = 0; i < dup.size() && all_copies; ++i) {
        const auto [a, b] = dup.parents[i];
        all_copies = a == b && d.label(a) == kMinority &&
                     std::ranges::equal(dup.samples.row(i), d.row(a));
      }
      copies += all_copies;
    }
  }
  const double seconds = Seconds(start);
  std::ostringstream s;
  s << "knn=5 bit-identical to SMOTE " << identical << "/" << runs
    << ", knn=0 exact copies " << copies << "/" << runs << ", " << seconds
    << " s (limit 5 s)";
  return {identical == runs && copies == runs && seconds < 5.0, s.str()};
}

Outcome Balance() {
  int checked = 0, balanced = 0, no_cluster = 0;
  std::vector<std::string> broken;
  const GridSpec grid = GridSpec::DeskScale();
  for (const Dataset& d : Fixtures()) {
    for (const auto& o : grid.oversamplers) {
      if (o->method() == "none") continue;
      try {
        const Dataset out = o->Resample(d, 3);
        ++checked;
        if (out.minority_count() == out.majority_count()) {
          ++balanced;
        } else {
          broken.push_back(d.name() + " " + o->method() + ":" + o->params());
        }
      } catch (const NoMinorityClusterError&) {
        ++no_cluster;
      }
    }
  }
  std::ostringstream s;
  s << balanced << "/" << checked << " oversampler runs exactly balanced"
    << " over " << grid.oversamplers.size() - 1 << " configurations x 3"
    << " fixtures (" << no_cluster
    << " k-means SMOTE configurations had no admissible cluster)";
  if (!broken.empty()) s << "; first unbalanced: " << broken.front();
  return {checked > 0 && balanced == checked, s.str()};
}

Outcome NoiseAvoidance() {
  const Dataset d = fixtures::PlantedOutlier();
  const std::size_t outlier = fixtures::kPlantedOutlierRow;
  auto uses_outlier = [&](const SyntheticBatch& b) {
    std::size_t count = 0;
    for (const auto& [a, c] : b.parents) count += a == outlier || c == outlier;
    return count;
  };
  std::size_t kms_hits = 0, smote_hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    KmsParams p;
    p.k = 10;
    p.irt = 1.0;
    p.seed = seed;
    kms_hits += uses_outlier(KMeansSmote(d, p).batch);
    smote_hits += uses_outlier(Smote(d, DefaultTargetCount(d), 5, seed));
  }
  std::ostringstream s;
  s << "samples with the outlier as parent over 20 seeds: k-means SMOTE "
    << kms_hits << ", SMOTE " << smote_hits;
  return {kms_hits == 0 && smote_hits >= 1, s.str()};
}

Outcome WithinClass() {
  int sparse_wins = 0, exact = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const fixtures::TwoBlob f = fixtures::MakeTwoBlob(seed);
    KmsParams p;
    p.k = 3;
    p.irt = 1.0;
    p.seed = seed;
    const KmsResult r = KMeansSmote(f.dataset, p);
    std::size_t dense = 0, sparse = 0;
    bool found_dense = false, found_sparse = false;
    for (const FilteredCluster& c : r.clusters) {
      if (c.minority_idx == f.dense_rows) dense = c.quota, found_dense = true;
      if (c.minority_idx == f.sparse_rows) sparse = c.quota, found_sparse = true;
    }
    if (!found_dense || !found_sparse || r.clusters.size() != 2) continue;
    sparse_wins += sparse > dense;

    // Hand weights: sparsity = avg distance^m / count with m = 2 features.
    auto sparsity = [&](const std::vector<std::size_t>& rows) {
      std::vector<std::vector<double>> pts;
      for (std::size_t i : rows) {
        pts.emplace_back(f.dataset.row(i).begin(), f.dataset.row(i).end());
      }
      return std::pow(oracle::MeanPairwiseDistance(pts), 2.0) /
             static_cast<double>(rows.size());
    };
    const double sd = sparsity(f.dense_rows), ss = sparsity(f.sparse_rows);
    const auto quotas = oracle::LargestRemainder(
        {sd / (sd + ss), ss / (sd + ss)}, DefaultTargetCount(f.dataset));
    exact += quotas[0] == dense && quotas[1] == sparse;
  }
  std::ostringstream s;
  s << "sparse quota > dense in " << sparse_wins
    << "/20 seeds, quotas equal to hand-computed apportionment in " << exact
    << "/20";
  return {sparse_wins == 20 && exact == 20, s.str()};
}

Outcome MetricOracles() {
  Rng rng(2024);
  int auprc_ok = 0;
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng.UniformIndex(11);
    std::vector<double> scores;
    std::vector<int> truth;
    do {
      scores.clear();
      truth.clear();
      for (std::size_t i = 0; i < n; ++i) {
        scores.push_back(static_cast<double>(rng.UniformIndex(8)) / 7.0);
        truth.push_back(rng.NextUnit() < 0.4 ? 1 : 0);
      }
    } while (std::count(truth.begin(), truth.end(), 1) == 0 ||
             std::count(truth.begin(), truth.end(), 0) == 0);
    const double diff =
        std::abs(Auprc(scores, truth) - oracle::BruteForceAuprc(scores, truth));
    worst = std::max(worst, diff);
    auprc_ok += diff <= 1e-12;
  }

  // Hand tables.
  int table_ok = 0, tables = 0;
  auto check = [&](bool ok) { ++tables, table_ok += ok; };
  ConfusionMatrix cm;
  cm.tp = 9, cm.fn = 1, cm.tn = 40, cm.fp = 10;
  const BasicRates r = ComputeRates(cm);
  check(r.sensitivity == 0.9);
  check(r.specificity == 0.8);
  check(r.precision == 9.0 / 19.0);
  check(std::abs(r.accuracy - 49.0 / 60.0) <= 1e-15);
  ConfusionMatrix half;
  half.tp = 5, half.fp = 5;
  check(std::abs(F1Score(half) - 2.0 / 3.0) <= 1e-15);
  ConfusionMatrix g;
  g.tp = 9, g.fn = 1, g.tn = 4, g.fp = 6;
  check(std::abs(GMean(g) - 0.6) <= 1e-15);
  ConfusionMatrix none;
  none.fn = 10, none.tn = 990;
  check(GMean(none) == 0.0 && F1Score(none) == 0.0 &&
        ComputeRates(none).accuracy == 0.99);
  check(Confusion(std::vector<int>{1, 0, 1, 0}, std::vector<int>{1, 1, 0, 0}) ==
        ConfusionMatrix{1, 1, 1, 1});
  check(std::abs(Auprc(std::vector<double>{0.9, 0.8, 0.7, 0.6},
                       std::vector<int>{1, 0, 1, 0}) -
                 5.0 / 6.0) <= 1e-15);

  std::ostringstream s;
  s << "AUPRC matches brute force in " << auprc_ok
    << "/1000 draws (max |diff| " << worst << ", tol 1e-12); hand tables "
    << table_ok << "/" << tables;
  return {auprc_ok == 1000 && table_ok == tables, s.str()};
}

Outcome Friedman() {
  const std::vector<std::vector<double>> ranks(4, {1, 2, 3});
  const FriedmanResult r = FriedmanTest(ranks);
  // Published chi-squared tail for (8, df = 2).
  const double published = 0.01831563888873418;
  std::ostringstream s;
  s.precision(17);
  s << "statistic " << r.statistic << " (expected 8, tol 1e-12), p "
    << r.p_value << " (expected " << published << ", tol 1e-6)";
  return {std::abs(r.statistic - 8.0) <= 1e-12 &&
              std::abs(r.p_value - published) <= 1e-6,
          s.str()};
}

Outcome GradientCheck() {
  Rng rng(31);
  int ok = 0;
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 5 + rng.UniformIndex(30), m = 1 + rng.UniformIndex(6);
    Matrix x(n, m);
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) x(i, j) = 2.0 * rng.NextNormal();
      y[i] = rng.NextUnit() < 0.3 ? 1 : 0;
    }
    std::vector<double> theta(m + 1);
    for (double& v : theta) v = rng.NextNormal();
    const auto loss = [&](const std::vector<double>& v) {
      const std::vector<double> w(v.begin(), v.end() - 1);
      return LogisticObjective(x, y, w, v.back(), 1e-2).loss;
    };
    const std::vector<double> w(theta.begin(), theta.end() - 1);
    const LossAndGradient g = LogisticObjective(x, y, w, theta.back(), 1e-2);
    bool instance_ok = true;
    for (std::size_t j = 0; j <= m; ++j) {
      const double numeric = oracle::CentralDifference(loss, theta, j, 1e-5);
      const double analytic = j < m ? g.grad_weights[j] : g.grad_bias;
      const double rel =
          std::abs(analytic - numeric) / std::max(1.0, std::abs(numeric));
      worst = std::max(worst, rel);
      instance_ok = instance_ok && rel <= 1e-5;
    }
    ok += instance_ok;
  }
  std::ostringstream s;
  s << ok << "/50 instances within 1e-5 relative (worst " << worst << ")";
  return {ok == 50, s.str()};
}

std::vector<Dataset> DeskDatasets() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(fixtures::DataPath(""))) {
    if (e.path().extension() == ".csv") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Dataset> out;
  for (const fs::path& f : files) out.push_back(LoadCsv(f));
  return out;
}

struct DeskRun {
  double seconds = 0.0;
  EvalReport report;
};

DeskRun RunDesk(const std::vector<Dataset>& datasets, int jobs,
                const fs::path& dir) {
  ExperimentOptions options;
  options.folds = 5;
  options.repeats = 5;
  options.seed = 0;
  options.jobs = jobs;
  const auto start = Clock::now();
  DeskRun run;
  run.report = RunExperiment(datasets, GridSpec::DeskScale(), options);
  WriteReport(run.report, dir);
  run.seconds = Seconds(start);
  return run;
}

Outcome DeskTrend(const DeskRun& run, std::size_t num_datasets) {
  int no_worse = 0, rejected = 0, pairs = 0;
  std::ostringstream s;
  s.precision(4);
  for (const RankingResult& r : run.report.rankings) {
    ++pairs;
    rejected += r.friedman_valid && r.friedman.reject;
    if (r.classifier != "KNN") continue;
    auto rank_of = [&](const std::string& m) {
      const auto it = std::find(r.methods.begin(), r.methods.end(), m);
      return it == r.methods.end() ? NAN : r.mean_ranks[it - r.methods.begin()];
    };
    const double kms = rank_of("kmeans-smote"), smote = rank_of("smote");
    no_worse += kms <= smote;
    s << "KNN/" << r.metric << " mean rank k-means SMOTE " << kms
      << " vs SMOTE " << smote << "; ";
  }
  s << "k-means SMOTE no worse on " << no_worse << "/3 metrics (need 2);"
    << " Friedman rejects in " << rejected << "/" << pairs
    << " pairs (need 1); " << num_datasets << " datasets (need 8); "
    << run.seconds << " s (budget 1800 s)";
  return {num_datasets >= 8 && no_worse >= 2 && rejected >= 1 &&
              run.seconds < 1800.0,
          s.str()};
}

Outcome Determinism(const fs::path& a, const fs::path& b, double seconds) {
  int same = 0, files = 0;
  std::string differing;
  for (const char* f : {"report.json", "grid_scores.csv", "fold_scores.csv",
                        "repeat_scores.csv", "ranks.csv", "friedman.csv"}) {
    ++files;
    if (ReadFile(a / f) == ReadFile(b / f)) {
      ++same;
    } else if (differing.empty()) {
      differing = f;
    }
  }
  std::ostringstream s;
  s << same << "/" << files
    << " report files byte-identical on rerun with a different worker count ("
    << seconds << " s)";
  if (!differing.empty()) s << "; first difference in " << differing;
  return {same == files, s.str()};
}

int Main(int argc, char** argv) {
  const fs::path out =
      argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "kmsmote_acc";
  int failures = 0;
  auto report = [&](const std::string& name,
                    const std::function<Outcome()>& check) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail
              << std::endl;
  };

  report("limit-case equivalence", LimitCases);
  report("balance guarantee", Balance);
  report("noise avoidance", NoiseAvoidance);
  report("within-class rebalancing", WithinClass);
  report("metric oracles", MetricOracles);
  report("friedman statistic", Friedman);
  report("logistic gradient check", GradientCheck);

  std::vector<Dataset> datasets;
  DeskRun first;
  bool desk_ok = false;
  report("desk-scale trend", [&] {
    datasets = DeskDatasets();
    first = RunDesk(datasets, 1, out / "desk_run1");
    desk_ok = true;
    return DeskTrend(first, datasets.size());
  });
  report("determinism", [&] {
    if (!desk_ok) return Outcome{false, "desk-scale run did not complete"};
    const DeskRun second = RunDesk(datasets, 3, out / "desk_run2");
    return Determinism(out / "desk_run1", out / "desk_run2", second.seconds);
  });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace kmsmote

int main(int argc, char** argv) { return kmsmote::Main(argc, argv); }
