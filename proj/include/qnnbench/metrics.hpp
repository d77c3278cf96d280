// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QNNBENCH_METRICS_HPP_
#define QNNBENCH_METRICS_HPP_

#include <string>
#include <vector>

namespace qnnbench {

enum class Split { kTrain, kTest };

const char* split_name(Split s);

// One per-epoch measurement on one split.
struct MetricsRecord {
  int epoch = 0;  // 1-based
  Split split = Split::kTrain;
  double loss = 0.0;
  double accuracy = 0.0;
};

// Shortest decimal string that round-trips the double exactly. Used for all
// persisted numbers so identical runs produce identical bytes.
std::string format_double(double v);

// Writes the stable schema `epoch,split,loss,accuracy`.
void write_metrics_csv(const std::vector<MetricsRecord>& records,
                       const std::string& path);

// Parses a metrics CSV back; throws DataError on malformed content.
std::vector<MetricsRecord> read_metrics_csv(const std::string& path);

}  // namespace qnnbench

#endif  // QNNBENCH_METRICS_HPP_
