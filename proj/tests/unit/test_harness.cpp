// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/harness.hpp"

#include <catch2/catch.hpp>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qnnbench/errors.hpp"
#include "qnnbench/metrics.hpp"

using namespace qnnbench;

#ifndef QNNBENCH_DATASET_DIR
#define QNNBENCH_DATASET_DIR "datasets"
#endif

namespace {

namespace fs = std::filesystem;

std::string iris_path() {
  return std::string(QNNBENCH_DATASET_DIR) + "/iris.csv";
}

// Scratch directory removed when the test section ends.
struct TempDir {
  fs::path path;

  explicit TempDir(const char* tag) {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("qnnbench_run_" + std::to_string(::getpid()) + "_" + tag +
            std::to_string(counter++));
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig tiny_iris(const std::string& out_dir, int epochs = 1) {
  ExperimentConfig config;
  config.dataset_path = iris_path();
  config.epochs = epochs;
  config.lr = 0.5;
  config.seed = 7;
  config.out_dir = out_dir;
  return config;
}

}  // namespace

TEST_CASE("a run directory carries config, metrics, manifest, and the marker",
          "[harness]") {
  TempDir dir("files");
  RunResult result = run_experiment(tiny_iris(dir.path.string()));
  CHECK(result.run_dir == dir.path.string());
  CHECK(fs::exists(dir.path / "config.json"));
  CHECK(fs::exists(dir.path / "metrics.csv"));
  CHECK(fs::exists(dir.path / "manifest.json"));
  CHECK(fs::exists(dir.path / "DONE"));

  // one epoch, both splits
  auto records = read_metrics_csv((dir.path / "metrics.csv").string());
  REQUIRE(records.size() == 2);
  CHECK(records[0].epoch == 1);
  CHECK(records[0].split == Split::kTrain);
  CHECK(records[1].split == Split::kTest);
  CHECK(result.metrics.size() == 2);
  CHECK(result.final_train_accuracy == records[0].accuracy);
  CHECK(result.final_test_accuracy == records[1].accuracy);

  std::string config_echo = slurp(dir.path / "config.json");
  CHECK(config_echo.find("\"dataset\"") != std::string::npos);
  CHECK(config_echo.find("\"seed\": 7") != std::string::npos);
}

TEST_CASE("epochs are contiguous from one in the metrics file", "[harness]") {
  TempDir dir("epochs");
  run_experiment(tiny_iris(dir.path.string(), 5));
  auto records = read_metrics_csv((dir.path / "metrics.csv").string());
  REQUIRE(records.size() == 10);
  for (int e = 1; e <= 5; ++e) {
    CHECK(records[2 * (e - 1)].epoch == e);
    CHECK(records[2 * (e - 1)].split == Split::kTrain);
    CHECK(records[2 * e - 1].epoch == e);
    CHECK(records[2 * e - 1].split == Split::kTest);
  }
}

TEST_CASE("identical configs produce byte-identical metrics",
          "[harness][property]") {
  TempDir a("bytes_a");
  TempDir b("bytes_b");
  run_experiment(tiny_iris(a.path.string(), 3));
  run_experiment(tiny_iris(b.path.string(), 3));
  std::string ma = slurp(a.path / "metrics.csv");
  std::string mb = slurp(b.path / "metrics.csv");
  CHECK(!ma.empty());
  CHECK(ma == mb);
}

TEST_CASE("the nn model runs through the same harness", "[harness]") {
  TempDir dir("nn");
  ExperimentConfig config = tiny_iris(dir.path.string(), 2);
  config.model = "nn";
  config.nn_activation = "tanh";
  RunResult result = run_experiment(config);
  CHECK(result.metrics.size() == 4);
  CHECK(fs::exists(dir.path / "DONE"));
}

TEST_CASE("config validation rejects out-of-domain values", "[harness]") {
  ExperimentConfig config = tiny_iris("unused");
  config.epochs = 0;
  CHECK_THROWS_AS(config.validate(), UsageError);

  config = tiny_iris("unused");
  config.lr = 0.0;  // the harness insists on a positive learning rate
  CHECK_THROWS_AS(config.validate(), UsageError);

  config = tiny_iris("unused");
  config.model = "svm";
  CHECK_THROWS_AS(config.validate(), UsageError);

  config = tiny_iris("unused");
  config.hidden = {10, 0};
  CHECK_THROWS_AS(config.validate(), UsageError);

  config = tiny_iris("unused");
  config.stats_scope = "global";
  CHECK_THROWS_AS(config.validate(), UsageError);

  config = tiny_iris("unused");
  config.train_fraction = 1.0;
  CHECK_THROWS_AS(config.validate(), UsageError);

  config = tiny_iris("unused");
  config.nn_activation = "relu";
  CHECK_THROWS_AS(config.validate(), UsageError);

  config = tiny_iris("unused");
  config.nn_loss = "hinge";
  CHECK_THROWS_AS(config.validate(), UsageError);

  config = tiny_iris("unused");
  config.out_dir = "";
  CHECK_THROWS_AS(config.validate(), UsageError);
}

TEST_CASE("a missing dataset surfaces as a data error", "[harness]") {
  TempDir dir("missing");
  ExperimentConfig config = tiny_iris(dir.path.string());
  config.dataset_path = "/nonexistent/nope.csv";
  CHECK_THROWS_AS(run_experiment(config), DataError);
}

TEST_CASE("compare_runs reports itself as a tie", "[harness]") {
  TempDir dir("self");
  run_experiment(tiny_iris(dir.path.string(), 2));
  Comparison cmp = compare_runs(dir.path.string(), dir.path.string());
  CHECK(cmp.smaller_gap == '=');
  CHECK(cmp.a.gap == cmp.b.gap);
  CHECK(cmp.a.final_train_accuracy == cmp.b.final_train_accuracy);

  std::string text = comparison_text(cmp);
  CHECK(text.find("gap") != std::string::npos);
  std::string csv = comparison_csv(cmp);
  CHECK(csv.find("final_train_accuracy") != std::string::npos);
}

TEST_CASE("compare_runs refuses a directory without the completion marker",
          "[harness]") {
  TempDir done("done");
  TempDir partial("partial");
  run_experiment(tiny_iris(done.path.string(), 1));
  run_experiment(tiny_iris(partial.path.string(), 1));
  fs::remove(partial.path / "DONE");
  CHECK_THROWS_AS(compare_runs(done.path.string(), partial.path.string()),
                  DataError);
  CHECK_THROWS_WITH(compare_runs(done.path.string(), partial.path.string()),
                    Catch::Contains("DONE"));
}

TEST_CASE("emit_plot renders both splits and the final values", "[harness]") {
  TempDir dir("plot");
  run_experiment(tiny_iris(dir.path.string(), 4));
  fs::path svg = dir.path / "curves.svg";
  emit_plot((dir.path / "metrics.csv").string(), svg.string());
  REQUIRE(fs::exists(svg));
  std::string text = slurp(svg);
  CHECK(text.rfind("<?xml", 0) == 0);
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("data-split=\"train\"") != std::string::npos);
  CHECK(text.find("data-split=\"test\"") != std::string::npos);
  CHECK(text.find("data-series=\"accuracy\"") != std::string::npos);
  CHECK(text.find("data-series=\"loss\"") != std::string::npos);

  // the labelled endpoint equals the final accuracy in the csv
  auto records = read_metrics_csv((dir.path / "metrics.csv").string());
  double final_train_acc = 0.0;
  for (const auto& r : records) {
    if (r.split == Split::kTrain) final_train_acc = r.accuracy;
  }
  std::string needle = "data-final=\"" + format_double(final_train_acc) + "\"";
  CHECK(text.find(needle) != std::string::npos);
}

TEST_CASE("emit_plot rejects empty metrics without creating a file",
          "[harness]") {
  TempDir dir("emptyplot");
  fs::create_directories(dir.path);
  fs::path csv = dir.path / "empty.csv";
  {
    std::ofstream out(csv);
    out << "epoch,split,loss,accuracy\n";
  }
  fs::path svg = dir.path / "should_not_exist.svg";
  CHECK_THROWS_AS(emit_plot(csv.string(), svg.string()), DataError);
  CHECK(!fs::exists(svg));
}

TEST_CASE("the cli wires run, plot, and compare together", "[harness]") {
  TempDir dir("cli");
  std::string out = (dir.path / "run").string();
  int code = cli_main({"run", "--dataset", iris_path(), "--model", "qnn",
                       "--epochs", "2", "--lr", "0.5", "--seed", "3", "--out",
                       out});
  CHECK(code == 0);
  CHECK(fs::exists(dir.path / "run" / "DONE"));

  std::string svg = (dir.path / "curves.svg").string();
  CHECK(cli_main({"plot", "--metrics", out + "/metrics.csv", "--out", svg}) ==
        0);
  CHECK(fs::exists(svg));

  CHECK(cli_main({"compare", "--a", out, "--b", out}) == 0);
}

TEST_CASE("cli exit codes distinguish usage, data, and success", "[harness]") {
  CHECK(cli_main({}) == 1);
  CHECK(cli_main({"--help"}) == 0);
  CHECK(cli_main({"help"}) == 0);
  CHECK(cli_main({"frobnicate"}) == 1);
  CHECK(cli_main({"run", "--bogus-flag", "1"}) == 1);
  CHECK(cli_main({"run", "--dataset"}) == 1);  // missing value

  TempDir dir("cli_codes");
  // usage: lr must parse as a number
  CHECK(cli_main({"run", "--dataset", iris_path(), "--lr", "abc", "--out",
                  (dir.path / "x").string()}) == 1);
  // data: dataset file absent
  CHECK(cli_main({"run", "--dataset", "/nonexistent/nope.csv", "--out",
                  (dir.path / "y").string()}) == 2);
  // data: malformed metrics for plot
  CHECK(cli_main({"plot", "--metrics", "/nonexistent/m.csv", "--out",
                  (dir.path / "z.svg").string()}) == 2);
}

TEST_CASE("cli flags override values from a config file", "[harness]") {
  TempDir dir("cfgfile");
  fs::create_directories(dir.path);
  fs::path cfg = dir.path / "config.json";
  {
    std::ofstream out(cfg);
    out << "{\"dataset\": \"" << iris_path() << "\", \"epochs\": 1, "
        << "\"lr\": 0.5, \"seed\": 11, \"out\": \""
        << (dir.path / "from_file").string() << "\"}";
  }
  CHECK(cli_main({"run", "--config", cfg.string()}) == 0);
  CHECK(fs::exists(dir.path / "from_file" / "DONE"));

  // the flag wins over the file value
  std::string out2 = (dir.path / "override").string();
  CHECK(cli_main({"run", "--config", cfg.string(), "--out", out2, "--epochs",
                  "2"}) == 0);
  auto records = read_metrics_csv(out2 + "/metrics.csv");
  CHECK(records.size() == 4);
}
