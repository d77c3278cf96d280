// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0
//
// Classical MLP baseline with the same layer widths as the quantum model:
// sigmoid (or tanh) hidden layers, softmax head, full-batch gradient descent.

#ifndef QNNBENCH_MLP_HPP_
#define QNNBENCH_MLP_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "qnnbench/matrix.hpp"
#include "qnnbench/metrics.hpp"

namespace qnnbench {

enum class MlpActivation { kSigmoid, kTanh };
enum class MlpLoss { kCrossEntropy, kSquaredError };

struct MlpNetwork {
  std::vector<Matrix> weights;             // weights[l](out, in)
  std::vector<std::vector<double>> biases;
  MlpActivation activation = MlpActivation::kSigmoid;
  MlpLoss loss = MlpLoss::kCrossEntropy;
};

// Weights and biases uniform in [-0.5, 0.5], seeded.
MlpNetwork make_mlp(std::size_t inputs, const std::vector<std::size_t>& hidden,
                    std::size_t outputs, std::uint64_t seed,
                    MlpActivation activation = MlpActivation::kSigmoid,
                    MlpLoss loss = MlpLoss::kCrossEntropy);

// Class probability vector (softmax output).
std::vector<double> mlp_forward(const MlpNetwork& net,
                                const std::vector<double>& features);

struct MlpGradients {
  std::vector<Matrix> weights;
  std::vector<std::vector<double>> biases;
};

// Analytic gradient of the configured loss for one sample.
MlpGradients mlp_backward(const MlpNetwork& net,
                          const std::vector<double>& features, int label);

// Per-sample loss value under the configured loss.
double mlp_loss_value(const MlpNetwork& net, const std::vector<double>& probs,
                      int label);

struct MlpBatch {
  Matrix features;  // scaled to [0, 1]
  std::vector<int> labels;
  int class_count = 2;
};

// (mean loss, accuracy) where accuracy counts argmax hits.
std::pair<double, double> mlp_evaluate(const MlpNetwork& net,
                                       const MlpBatch& batch);

// Full-batch gradient descent on the mean loss; metrics per epoch on train
// (and test when given), epochs numbered from 1.
std::vector<MetricsRecord> mlp_train(MlpNetwork& net, const MlpBatch& train,
                                     const MlpBatch* test, double lr,
                                     int epochs);

// Max guarded relative error between mlp_backward and central finite
// differences (step fd_step) over every weight and bias.
double mlp_gradient_check(const MlpNetwork& net,
                          const std::vector<double>& features, int label,
                          double fd_step = 1e-6);

}  // namespace qnnbench

#endif  // QNNBENCH_MLP_HPP_
