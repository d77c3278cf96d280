// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/metrics.hpp"

#include <catch2/catch.hpp>
#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qnnbench/errors.hpp"
#include "qnnbench/rng.hpp"

using namespace qnnbench;

namespace {

std::filesystem::path temp_path(const char* tag) {
  static int counter = 0;
  return std::filesystem::temp_directory_path() /
         ("qnnbench_metrics_" + std::to_string(::getpid()) + "_" + tag +
          std::to_string(counter++) + ".csv");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("format_double emits the shortest round-tripping decimal",
          "[metrics]") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-2.25) == "-2.25");
  CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("format_double round-trips random doubles exactly",
          "[metrics][property]") {
  Rng rng(91);
  for (int i = 0; i < 500; ++i) {
    double v = rng.uniform(-1000.0, 1000.0) *
               std::pow(10.0, static_cast<double>(rng.below(7)) - 3.0);
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("metrics survive a write/read round trip", "[metrics]") {
  std::vector<MetricsRecord> records = {
      {1, Split::kTrain, 0.75, 0.5},
      {1, Split::kTest, 0.8125, 0.4375},
      {2, Split::kTrain, 0.5, 0.625},
      {2, Split::kTest, 0.59375, 0.5},
  };
  auto path = temp_path("roundtrip");
  write_metrics_csv(records, path.string());
  auto back = read_metrics_csv(path.string());
  std::filesystem::remove(path);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(back[i].epoch == records[i].epoch);
    CHECK(back[i].split == records[i].split);
    CHECK(back[i].loss == records[i].loss);  // bit-identical
    CHECK(back[i].accuracy == records[i].accuracy);
  }
}

TEST_CASE("the csv header is the stable four-column schema", "[metrics]") {
  auto path = temp_path("schema");
  write_metrics_csv({{1, Split::kTrain, 0.25, 1.0}}, path.string());
  std::string text = slurp(path);
  std::filesystem::remove(path);
  CHECK(text == "epoch,split,loss,accuracy\n1,train,0.25,1\n");
}

TEST_CASE("writing the same records twice gives identical bytes",
          "[metrics][property]") {
  Rng rng(93);
  std::vector<MetricsRecord> records;
  for (int e = 1; e <= 50; ++e) {
    records.push_back({e, Split::kTrain, rng.uniform(), rng.uniform()});
    records.push_back({e, Split::kTest, rng.uniform(), rng.uniform()});
  }
  auto p1 = temp_path("bytes_a");
  auto p2 = temp_path("bytes_b");
  write_metrics_csv(records, p1.string());
  write_metrics_csv(records, p2.string());
  std::string a = slurp(p1);
  std::string b = slurp(p2);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("malformed metrics files are rejected with the line number",
          "[metrics]") {
  auto path = temp_path("bad");

  {
    std::ofstream out(path);
    out << "epoch,split,loss\n";  // wrong header
  }
  CHECK_THROWS_AS(read_metrics_csv(path.string()), DataError);

  {
    std::ofstream out(path);
    out << "epoch,split,loss,accuracy\n1,train,0.5\n";  // short row
  }
  CHECK_THROWS_AS(read_metrics_csv(path.string()), DataError);
  CHECK_THROWS_WITH(read_metrics_csv(path.string()), Catch::Contains("2"));

  {
    std::ofstream out(path);
    out << "epoch,split,loss,accuracy\n1,validation,0.5,0.5\n";  // bad split
  }
  CHECK_THROWS_AS(read_metrics_csv(path.string()), DataError);

  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_metrics_csv(path.string()), DataError);
}

TEST_CASE("split_name maps the enum to csv tokens", "[metrics]") {
  CHECK(std::string(split_name(Split::kTrain)) == "train");
  CHECK(std::string(split_name(Split::kTest)) == "test");
}
