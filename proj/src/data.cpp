// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/data.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <string>

#include "qnnbench/errors.hpp"
#include "qnnbench/metrics.hpp"
#include "qnnbench/rng.hpp"

namespace qnnbench {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_cells(const std::string& line, char delim) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delim, start);
    if (pos == std::string::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return cells;
}

bool is_missing(const std::string& cell) { return cell.empty() || cell == "?"; }

bool parse_double(const std::string& cell, double* out) {
  double v = 0.0;
  auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
    return false;
  }
  *out = v;
  return true;
}

}  // namespace

Dataset load_csv(const std::string& path, const LoadOptions& options,
                 LoadReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dataset: " + path);

  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_cells(line, options.delimiter));
  }
  if (rows.empty()) throw DataError(path + ": no rows");

  std::size_t width = rows[0].size();
  if (width < 2) {
    throw DataError(path + ": need at least one feature and a label column");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw DataError(path + ": row " + std::to_string(r + 1) + " has " +
                      std::to_string(rows[r].size()) + " cells, expected " +
                      std::to_string(width));
    }
  }

  std::size_t label_col;
  if (options.label_column < 0) {
    label_col = width - 1;
  } else if (static_cast<std::size_t>(options.label_column) < width) {
    label_col = static_cast<std::size_t>(options.label_column);
  } else {
    throw DataError(path + ": label column " +
                    std::to_string(options.label_column) +
                    " out of range for width " + std::to_string(width));
  }

  // Header detection: any non-numeric, non-missing cell in a feature
  // position of row one means row one is a header.
  bool has_header = false;
  for (std::size_t c = 0; c < width; ++c) {
    if (c == label_col) continue;
    double v;
    if (!is_missing(rows[0][c]) && !parse_double(rows[0][c], &v)) {
      has_header = true;
      break;
    }
  }

  Dataset ds;
  for (std::size_t c = 0; c < width; ++c) {
    std::string name = has_header ? rows[0][c]
                                  : (c == label_col
                                         ? std::string("label")
                                         : "f" + std::to_string(c));
    if (c == label_col) {
      ds.label_name = name;
    } else {
      ds.feature_names.push_back(name);
    }
  }

  std::map<std::string, int> class_index;
  if (!options.class_order.empty()) {
    for (std::size_t i = 0; i < options.class_order.size(); ++i) {
      class_index[options.class_order[i]] = static_cast<int>(i);
    }
    ds.class_names = options.class_order;
  }

  std::size_t first_data = has_header ? 1 : 0;
  if (first_data >= rows.size()) throw DataError(path + ": no data rows");

  std::vector<std::vector<double>> feats;
  std::size_t dropped = 0;
  for (std::size_t r = first_data; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    bool missing = std::any_of(cells.begin(), cells.end(), is_missing);
    if (missing) {
      ++dropped;
      continue;
    }
    std::vector<double> feat;
    feat.reserve(width - 1);
    for (std::size_t c = 0; c < width; ++c) {
      if (c == label_col) continue;
      double v;
      if (!parse_double(cells[c], &v)) {
        throw DataError(path + ": row " + std::to_string(r + 1) + " column " +
                        std::to_string(c + 1) + ": non-numeric feature '" +
                        cells[c] + "'");
      }
      feat.push_back(v);
    }
    const std::string& label = cells[label_col];
    auto it = class_index.find(label);
    if (it == class_index.end()) {
      if (!options.class_order.empty()) {
        throw DataError(path + ": row " + std::to_string(r + 1) +
                        ": label '" + label +
                        "' not in the configured class order");
      }
      int idx = static_cast<int>(ds.class_names.size());
      it = class_index.emplace(label, idx).first;
      ds.class_names.push_back(label);
    }
    ds.labels.push_back(it->second);
    feats.push_back(std::move(feat));
  }
  if (feats.empty()) throw DataError(path + ": every row had missing cells");

  ds.class_count = static_cast<int>(ds.class_names.size());
  ds.features = Matrix(feats.size(), width - 1);
  for (std::size_t r = 0; r < feats.size(); ++r) {
    for (std::size_t c = 0; c + 1 < width; ++c) ds.features(r, c) = feats[r][c];
  }
  if (report) report->dropped_rows = dropped;
  return ds;
}

void write_csv(const Dataset& ds, const std::string& path, char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dataset: " + path);
  for (std::size_t c = 0; c < ds.feature_names.size(); ++c) {
    out << ds.feature_names[c] << delimiter;
  }
  out << ds.label_name << '\n';
  for (std::size_t r = 0; r < ds.features.rows; ++r) {
    for (std::size_t c = 0; c < ds.features.cols; ++c) {
      out << format_double(ds.features(r, c)) << delimiter;
    }
    out << ds.class_names[ds.labels[r]] << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

Dataset take_rows(const Dataset& ds, const std::vector<std::size_t>& idx) {
  Dataset out;
  out.class_count = ds.class_count;
  out.feature_names = ds.feature_names;
  out.label_name = ds.label_name;
  out.class_names = ds.class_names;
  out.features = Matrix(idx.size(), ds.features.cols);
  out.labels.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t c = 0; c < ds.features.cols; ++c) {
      out.features(i, c) = ds.features(idx[i], c);
    }
    out.labels.push_back(ds.labels[idx[i]]);
  }
  return out;
}

}  // namespace

SplitPair stratified_split(const Dataset& ds, double train_fraction,
                           std::uint64_t seed) {
  if (train_fraction <= 0.0 || train_fraction >= 1.0) {
    throw UsageError("train fraction must be in (0, 1)");
  }
  std::vector<std::vector<std::size_t>> by_class(ds.class_count);
  for (std::size_t r = 0; r < ds.labels.size(); ++r) {
    by_class[ds.labels[r]].push_back(r);
  }
  Rng rng(seed);
  std::vector<std::size_t> train_idx, test_idx;
  for (int c = 0; c < ds.class_count; ++c) {
    auto& idx = by_class[c];
    if (idx.size() < 2) {
      throw DataError("class '" + ds.class_names[c] + "' has " +
                      std::to_string(idx.size()) +
                      " samples; need at least 2 to split");
    }
    // Fisher-Yates with the shared stream keeps the whole split a function
    // of (dataset, seed) alone.
    for (std::size_t i = idx.size() - 1; i > 0; --i) {
      std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
      std::swap(idx[i], idx[j]);
    }
    std::size_t k = static_cast<std::size_t>(
        std::floor(train_fraction * static_cast<double>(idx.size())));
    train_idx.insert(train_idx.end(), idx.begin(), idx.begin() + k);
    test_idx.insert(test_idx.end(), idx.begin() + k, idx.end());
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  SplitPair pair;
  pair.seed = seed;
  pair.train = take_rows(ds, train_idx);
  pair.test = take_rows(ds, test_idx);
  return pair;
}

int output_qubit_count(int class_count) {
  if (class_count < 2) {
    throw DataError("need at least 2 classes, got " +
                    std::to_string(class_count));
  }
  return std::bit_width(static_cast<unsigned>(class_count - 1));
}

std::vector<int> label_to_code(int class_index, int class_count) {
  int nq = output_qubit_count(class_count);
  if (class_index < 0 || class_index >= class_count) {
    throw DataError("class index " + std::to_string(class_index) +
                    " out of range for " + std::to_string(class_count) +
                    " classes");
  }
  std::vector<int> bits(nq);
  for (int i = 0; i < nq; ++i) {
    bits[i] = (class_index >> (nq - 1 - i)) & 1;
  }
  return bits;
}

}  // namespace qnnbench
