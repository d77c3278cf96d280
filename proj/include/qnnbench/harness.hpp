// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0
//
// Experiment orchestration: configured runs with persisted metrics, SVG
// curve plots, and run-vs-run generalization comparison.

#ifndef QNNBENCH_HARNESS_HPP_
#define QNNBENCH_HARNESS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qnnbench/data.hpp"
#include "qnnbench/metrics.hpp"

namespace qnnbench {

struct ExperimentConfig {
  std::string dataset_path;
  LoadOptions load;
  std::string model = "qnn";  // qnn | nn
  std::vector<std::size_t> hidden = {10, 6};
  int epochs = 1000;
  double lr = 0.5;
  std::uint64_t seed = 1;
  double train_fraction = 0.75;
  std::string stats_scope = "whole";      // whole | train
  std::string nn_activation = "sigmoid";  // sigmoid | tanh
  std::string nn_loss = "cross_entropy";  // cross_entropy | squared_error
  std::string out_dir;

  // Throws UsageError on out-of-domain values.
  void validate() const;
};

struct RunResult {
  std::string run_dir;
  std::vector<MetricsRecord> metrics;
  double wall_seconds = 0.0;
  double final_train_accuracy = 0.0;
  double final_test_accuracy = 0.0;
};

// Loads, scales, splits, trains, and persists one experiment. The run
// directory ends up with config.json, metrics.csv, manifest.json and a DONE
// marker; DONE is written last, so its absence flags a partial run.
RunResult run_experiment(const ExperimentConfig& config);

// Renders a metrics CSV as one SVG: one panel per split, accuracy as a red
// solid line and loss as a blue dashed line over epochs. Throws DataError
// on malformed or empty input without creating the output file.
void emit_plot(const std::string& metrics_csv, const std::string& out_svg);

struct RunSummary {
  std::string dir;
  double final_train_accuracy = 0.0;
  double final_test_accuracy = 0.0;
  double peak_test_accuracy = 0.0;
  double gap = 0.0;  // final train - final test
};

struct Comparison {
  RunSummary a;
  RunSummary b;
  // 'a', 'b', or '=' when the gaps match exactly.
  char smaller_gap = '=';
};

// Reads two completed run directories (DONE marker required).
Comparison compare_runs(const std::string& dir_a, const std::string& dir_b);

std::string comparison_text(const Comparison& cmp);
std::string comparison_csv(const Comparison& cmp);

// The full command line: `run`, `plot`, and `compare` subcommands. Returns
// the process exit code instead of calling exit() so tests can drive it.
int cli_main(const std::vector<std::string>& args);

}  // namespace qnnbench

#endif  // QNNBENCH_HARNESS_HPP_
