// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qnnbench/encoding.hpp"
#include "qnnbench/errors.hpp"
#include "qnnbench/mlp.hpp"
#include "qnnbench/qnn.hpp"

namespace qnnbench {

namespace fs = std::filesystem;
using json = nlohmann::json;

void ExperimentConfig::validate() const {
  if (dataset_path.empty()) throw UsageError("no dataset given");
  if (out_dir.empty()) throw UsageError("no output directory given");
  if (model != "qnn" && model != "nn") {
    throw UsageError("model must be 'qnn' or 'nn', got '" + model + "'");
  }
  if (epochs < 1) throw UsageError("epochs must be >= 1");
  if (!(lr > 0.0)) throw UsageError("learning rate must be > 0");
  if (hidden.empty()) throw UsageError("need at least one hidden layer");
  for (std::size_t w : hidden) {
    if (w < 1) throw UsageError("hidden widths must be >= 1");
  }
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw UsageError("train fraction must be in (0, 1)");
  }
  if (stats_scope != "whole" && stats_scope != "train") {
    throw UsageError("stats scope must be 'whole' or 'train', got '" +
                     stats_scope + "'");
  }
  if (nn_activation != "sigmoid" && nn_activation != "tanh") {
    throw UsageError("nn activation must be 'sigmoid' or 'tanh'");
  }
  if (nn_loss != "cross_entropy" && nn_loss != "squared_error") {
    throw UsageError("nn loss must be 'cross_entropy' or 'squared_error'");
  }
}

namespace {

json config_json(const ExperimentConfig& c) {
  json j;
  j["dataset"] = c.dataset_path;
  j["delimiter"] = std::string(1, c.load.delimiter);
  j["label-column"] = c.load.label_column;
  j["class-order"] = c.load.class_order;
  j["model"] = c.model;
  j["hidden"] = c.hidden;
  j["epochs"] = c.epochs;
  j["lr"] = c.lr;
  j["seed"] = c.seed;
  j["train-fraction"] = c.train_fraction;
  j["stats-scope"] = c.stats_scope;
  j["nn-activation"] = c.nn_activation;
  j["nn-loss"] = c.nn_loss;
  j["out"] = c.out_dir;
  return j;
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

QnnBatch make_qnn_batch(const Dataset& ds, const FeatureStats& stats) {
  QnnBatch batch;
  batch.angles = encode_all(ds.features, stats);
  batch.labels = ds.labels;
  batch.class_count = ds.class_count;
  batch.codes.reserve(ds.labels.size());
  for (int label : ds.labels) {
    batch.codes.push_back(label_to_code(label, ds.class_count));
  }
  return batch;
}

MlpBatch make_mlp_batch(const Dataset& ds, const FeatureStats& stats) {
  MlpBatch batch;
  batch.features = scale_all(ds.features, stats);
  batch.labels = ds.labels;
  batch.class_count = ds.class_count;
  return batch;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  auto started = std::chrono::steady_clock::now();

  LoadReport report;
  Dataset ds = load_csv(config.dataset_path, config.load, &report);
  SplitPair split = stratified_split(ds, config.train_fraction, config.seed);
  FeatureStats stats = compute_stats(
      config.stats_scope == "whole" ? ds.features : split.train.features);

  std::vector<MetricsRecord> metrics;
  if (config.model == "qnn") {
    QnnBatch train = make_qnn_batch(split.train, stats);
    QnnBatch test = make_qnn_batch(split.test, stats);
    QnnNetwork net =
        make_qnn(ds.features.cols, config.hidden,
                 output_qubit_count(ds.class_count), config.seed);
    metrics = qnn_train(net, train, &test, config.lr, config.epochs);
  } else {
    MlpBatch train = make_mlp_batch(split.train, stats);
    MlpBatch test = make_mlp_batch(split.test, stats);
    MlpNetwork net = make_mlp(
        ds.features.cols, config.hidden,
        static_cast<std::size_t>(ds.class_count), config.seed,
        config.nn_activation == "sigmoid" ? MlpActivation::kSigmoid
                                          : MlpActivation::kTanh,
        config.nn_loss == "cross_entropy" ? MlpLoss::kCrossEntropy
                                          : MlpLoss::kSquaredError);
    metrics = mlp_train(net, train, &test, config.lr, config.epochs);
  }

  RunResult result;
  result.run_dir = config.out_dir;
  result.metrics = metrics;
  for (const auto& r : metrics) {
    if (r.split == Split::kTrain) result.final_train_accuracy = r.accuracy;
    if (r.split == Split::kTest) result.final_test_accuracy = r.accuracy;
  }

  fs::path dir(config.out_dir);
  fs::create_directories(dir);
  // A stale completion marker must not survive a partial rewrite.
  fs::remove(dir / "DONE");

  write_text(dir / "config.json", config_json(config).dump(2) + "\n");
  write_metrics_csv(metrics, (dir / "metrics.csv").string());

  auto finished = std::chrono::steady_clock::now();
  result.wall_seconds =
      std::chrono::duration<double>(finished - started).count();

  json manifest;
  manifest["config"] = config_json(config);
  manifest["seed"] = config.seed;
  manifest["wall_seconds"] = result.wall_seconds;
  manifest["dataset"] = {{"rows", ds.features.rows},
                         {"features", ds.features.cols},
                         {"classes", ds.class_count},
                         {"dropped_rows", report.dropped_rows},
                         {"train_rows", split.train.features.rows},
                         {"test_rows", split.test.features.rows}};
  manifest["final"] = {{"train_accuracy", result.final_train_accuracy},
                       {"test_accuracy", result.final_test_accuracy}};
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");

  write_text(dir / "DONE", "done\n");
  return result;
}

namespace {

RunSummary summarize_run(const std::string& dir) {
  fs::path p(dir);
  if (!fs::exists(p / "DONE")) {
    throw DataError("run directory " + dir +
                    " has no DONE marker; refusing to compare a partial run");
  }
  std::vector<MetricsRecord> metrics =
      read_metrics_csv((p / "metrics.csv").string());
  RunSummary s;
  s.dir = dir;
  bool saw_train = false, saw_test = false;
  for (const auto& r : metrics) {
    if (r.split == Split::kTrain) {
      s.final_train_accuracy = r.accuracy;
      saw_train = true;
    } else {
      s.final_test_accuracy = r.accuracy;
      s.peak_test_accuracy = std::max(s.peak_test_accuracy, r.accuracy);
      saw_test = true;
    }
  }
  if (!saw_train || !saw_test) {
    throw DataError(dir + ": metrics lack train or test rows");
  }
  s.gap = s.final_train_accuracy - s.final_test_accuracy;
  return s;
}

}  // namespace

Comparison compare_runs(const std::string& dir_a, const std::string& dir_b) {
  Comparison cmp;
  cmp.a = summarize_run(dir_a);
  cmp.b = summarize_run(dir_b);
  if (cmp.a.gap < cmp.b.gap) {
    cmp.smaller_gap = 'a';
  } else if (cmp.b.gap < cmp.a.gap) {
    cmp.smaller_gap = 'b';
  } else {
    cmp.smaller_gap = '=';
  }
  return cmp;
}

std::string comparison_text(const Comparison& cmp) {
  std::ostringstream out;
  auto row = [&](const char* tag, const RunSummary& s) {
    out << tag << "  " << s.dir << "\n"
        << "    final train accuracy: " << format_double(s.final_train_accuracy)
        << "\n"
        << "    final test accuracy:  " << format_double(s.final_test_accuracy)
        << "\n"
        << "    peak test accuracy:   " << format_double(s.peak_test_accuracy)
        << "\n"
        << "    generalization gap:   " << format_double(s.gap) << "\n";
  };
  row("a", cmp.a);
  row("b", cmp.b);
  if (cmp.smaller_gap == '=') {
    out << "smaller generalization gap: tie\n";
  } else {
    out << "smaller generalization gap: " << cmp.smaller_gap << "\n";
  }
  return out.str();
}

std::string comparison_csv(const Comparison& cmp) {
  std::ostringstream out;
  out << "run,final_train_accuracy,final_test_accuracy,peak_test_accuracy,"
         "gap,smaller_gap\n";
  auto row = [&](char tag, const RunSummary& s) {
    bool smaller = cmp.smaller_gap == tag;
    out << s.dir << ',' << format_double(s.final_train_accuracy) << ','
        << format_double(s.final_test_accuracy) << ','
        << format_double(s.peak_test_accuracy) << ',' << format_double(s.gap)
        << ',' << (smaller ? "yes" : (cmp.smaller_gap == '=' ? "tie" : "no"))
        << '\n';
  };
  row('a', cmp.a);
  row('b', cmp.b);
  return out.str();
}

}  // namespace qnnbench
