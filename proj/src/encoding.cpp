// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qnnbench/errors.hpp"

namespace qnnbench {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

FeatureStats compute_stats(const Matrix& features) {
  if (features.rows == 0 || features.cols == 0) {
    throw DataError("compute_stats: empty feature matrix");
  }
  FeatureStats stats;
  stats.mins.assign(features.row(0), features.row(0) + features.cols);
  stats.maxs = stats.mins;
  for (std::size_t r = 1; r < features.rows; ++r) {
    for (std::size_t c = 0; c < features.cols; ++c) {
      stats.mins[c] = std::min(stats.mins[c], features(r, c));
      stats.maxs[c] = std::max(stats.maxs[c], features(r, c));
    }
  }
  return stats;
}

double encode_feature(double x, double min, double max) {
  if (min >= max) return 0.0;
  double angle = (x - min) / (max - min) * kTwoPi;
  return std::clamp(angle, 0.0, kTwoPi);
}

std::vector<double> encode_sample(const std::vector<double>& raw,
                                  const FeatureStats& stats) {
  if (raw.size() != stats.size()) {
    throw DataError("encode_sample: sample has " + std::to_string(raw.size()) +
                    " features, stats cover " + std::to_string(stats.size()));
  }
  std::vector<double> angles(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    angles[j] = encode_feature(raw[j], stats.mins[j], stats.maxs[j]);
  }
  return angles;
}

Matrix encode_all(const Matrix& features, const FeatureStats& stats) {
  if (features.cols != stats.size()) {
    throw DataError("encode_all: feature count mismatch");
  }
  Matrix out(features.rows, features.cols);
  for (std::size_t r = 0; r < features.rows; ++r) {
    for (std::size_t c = 0; c < features.cols; ++c) {
      out(r, c) = encode_feature(features(r, c), stats.mins[c], stats.maxs[c]);
    }
  }
  return out;
}

double scale_unit(double x, double min, double max) {
  if (min >= max) return 0.0;
  return std::clamp((x - min) / (max - min), 0.0, 1.0);
}

Matrix scale_all(const Matrix& features, const FeatureStats& stats) {
  if (features.cols != stats.size()) {
    throw DataError("scale_all: feature count mismatch");
  }
  Matrix out(features.rows, features.cols);
  for (std::size_t r = 0; r < features.rows; ++r) {
    for (std::size_t c = 0; c < features.cols; ++c) {
      out(r, c) = scale_unit(features(r, c), stats.mins[c], stats.maxs[c]);
    }
  }
  return out;
}

QubitAmplitudes amplitudes(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace qnnbench
