// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0
//
// CSV ingestion, label coding, and seeded stratified splitting.

#ifndef QNNBENCH_DATA_HPP_
#define QNNBENCH_DATA_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "qnnbench/matrix.hpp"

namespace qnnbench {

struct Dataset {
  Matrix features;                         // rows = samples
  std::vector<int> labels;                 // class indices in [0, class_count)
  int class_count = 0;
  std::vector<std::string> feature_names;  // header names or f0, f1, ...
  std::string label_name = "label";
  std::vector<std::string> class_names;    // index -> label string
};

struct LoadOptions {
  char delimiter = ',';
  // Label column index; -1 means the last column.
  int label_column = -1;
  // Explicit class-name order. Empty: classes numbered by first appearance.
  std::vector<std::string> class_order;
};

struct LoadReport {
  std::size_t dropped_rows = 0;  // rows removed for missing cells
};

// Loads a CSV with an optional header row (detected by non-numeric cells in
// the feature columns of row one). Rows with missing cells ('' or '?') are
// dropped and counted in the report. Ragged rows, non-numeric features and
// labels outside an explicit class_order raise DataError naming the spot.
Dataset load_csv(const std::string& path, const LoadOptions& options = {},
                 LoadReport* report = nullptr);

// Writes a dataset back out in the same shape load_csv reads.
void write_csv(const Dataset& ds, const std::string& path,
               char delimiter = ',');

struct SplitPair {
  Dataset train;
  Dataset test;
  std::uint64_t seed = 0;
};

// Per-class seeded shuffle; floor(train_fraction * class size) rows of each
// class go to train, the rest to test. Every class needs >= 2 samples.
SplitPair stratified_split(const Dataset& ds, double train_fraction,
                           std::uint64_t seed);

// ceil(log2(class_count)), at least 1. class_count must be >= 2.
int output_qubit_count(int class_count);

// Big-endian binary code of class_index on output_qubit_count(c) bits.
std::vector<int> label_to_code(int class_index, int class_count);

}  // namespace qnnbench

#endif  // QNNBENCH_DATA_HPP_
