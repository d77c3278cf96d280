// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0
//
// Angle encoding of raw features: per-feature min-max statistics, the
// [0, 2pi] angle map, and the qubit amplitude pair for one angle.

#ifndef QNNBENCH_ENCODING_HPP_
#define QNNBENCH_ENCODING_HPP_

#include <vector>

#include "qnnbench/matrix.hpp"

namespace qnnbench {

// Per-feature minima and maxima, in raw feature units.
struct FeatureStats {
  std::vector<double> mins;
  std::vector<double> maxs;

  std::size_t size() const { return mins.size(); }
};

// Column-wise extrema over all rows. Throws DataError on an empty matrix.
FeatureStats compute_stats(const Matrix& features);

// (x - min) / (max - min) * 2pi, clamped into [0, 2pi]. A degenerate
// feature (min == max) encodes to 0.
double encode_feature(double x, double min, double max);

// Element-wise encode_feature. Throws DataError on a length mismatch.
std::vector<double> encode_sample(const std::vector<double>& raw,
                                  const FeatureStats& stats);

// encode_sample over every row.
Matrix encode_all(const Matrix& features, const FeatureStats& stats);

// (x - min) / (max - min) clamped into [0, 1]; the conventional scaling fed
// to the classical baseline so both models see the same statistics.
double scale_unit(double x, double min, double max);

Matrix scale_all(const Matrix& features, const FeatureStats& stats);

struct QubitAmplitudes {
  double a0;  // amplitude of |0>
  double a1;  // amplitude of |1>
};

// cos(theta)|0> + sin(theta)|1>
QubitAmplitudes amplitudes(double theta);

}  // namespace qnnbench

#endif  // QNNBENCH_ENCODING_HPP_
