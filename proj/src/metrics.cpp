// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/metrics.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qnnbench/errors.hpp"

namespace qnnbench {

const char* split_name(Split s) {
  return s == Split::kTrain ? "train" : "test";
}

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_metrics_csv(const std::vector<MetricsRecord>& records,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write metrics CSV: " + path);
  out << "epoch,split,loss,accuracy\n";
  for (const auto& r : records) {
    out << r.epoch << ',' << split_name(r.split) << ','
        << format_double(r.loss) << ',' << format_double(r.accuracy) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

double parse_num(const std::string& cell, const std::string& path,
                 std::size_t line) {
  double v = 0.0;
  auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
    throw DataError(path + ":" + std::to_string(line) +
                    ": not a number: '" + cell + "'");
  }
  return v;
}

}  // namespace

std::vector<MetricsRecord> read_metrics_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read metrics CSV: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "epoch,split,loss,accuracy") {
    throw DataError(path + ": missing metrics header");
  }
  std::vector<MetricsRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string epoch, split, loss, acc, extra;
    if (!std::getline(ss, epoch, ',') || !std::getline(ss, split, ',') ||
        !std::getline(ss, loss, ',') || !std::getline(ss, acc, ',')) {
      throw DataError(path + ":" + std::to_string(lineno) + ": short row");
    }
    if (std::getline(ss, extra, ',')) {
      throw DataError(path + ":" + std::to_string(lineno) + ": extra cells");
    }
    MetricsRecord r;
    r.epoch = static_cast<int>(parse_num(epoch, path, lineno));
    if (split == "train") {
      r.split = Split::kTrain;
    } else if (split == "test") {
      r.split = Split::kTest;
    } else {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": unknown split '" + split + "'");
    }
    r.loss = parse_num(loss, path, lineno);
    r.accuracy = parse_num(acc, path, lineno);
    records.push_back(r);
  }
  return records;
}

}  // namespace qnnbench
