// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0
//
// The sine-product quantum neural network: forward pass, squared-amplitude
// loss, analytic gradients, full-batch gradient descent, and binary-code
// prediction.

#ifndef QNNBENCH_QNN_HPP_
#define QNNBENCH_QNN_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "qnnbench/matrix.hpp"
#include "qnnbench/metrics.hpp"

namespace qnnbench {

// Inter-layer amplitudes are clamped to [-1 + kAmpClamp, 1 - kAmpClamp]
// before arcsin so the inverse and its derivative stay finite.
inline constexpr double kAmpClamp = 1e-7;

// Layer weights: layers[l](m, n) is the rotation angle the l-th layer's
// neuron m applies to its n-th input qubit.
struct QnnNetwork {
  std::vector<Matrix> layers;
  int output_qubits = 1;
};

// Weights drawn uniform in [0, 2pi), seeded. Hidden widths then an output
// layer of output_qubits neurons.
QnnNetwork make_qnn(std::size_t inputs, const std::vector<std::size_t>& hidden,
                    int output_qubits, std::uint64_t seed);

// prod_n sin(phi_n + w_n). Lengths must match.
double neuron_forward(const std::vector<double>& input_angles,
                      const std::vector<double>& weights);

// arcsin of the clamped amplitude: the principal angle whose |1>-amplitude
// is h with nonnegative |0>-amplitude.
double angle_of(double h);

// Everything backward needs: the input angles each layer saw and the raw
// (unclamped) neuron outputs it produced.
struct ForwardTrace {
  std::vector<std::vector<double>> inputs;   // inputs[l] feeds layers[l]
  std::vector<std::vector<double>> outputs;  // outputs[l] = that layer's h

  const std::vector<double>& y() const { return outputs.back(); }
};

ForwardTrace qnn_forward(const QnnNetwork& net,
                         const std::vector<double>& sample_angles);

// sum_i (y_i^2 - t_i)^2 over the output qubits.
double qnn_loss(const std::vector<double>& y, const std::vector<int>& target);

// Exact analytic gradient of the loss for one sample, one matrix per layer.
std::vector<Matrix> qnn_backward(const QnnNetwork& net,
                                 const ForwardTrace& trace,
                                 const std::vector<int>& target);

// theta <- theta - lr * grad. lr must be > 0.
void gd_step(QnnNetwork& net, const std::vector<Matrix>& grads, double lr);

// bit_i = 1 iff y_i^2 >= 0.5.
std::vector<int> predict_bits(const std::vector<double>& y);

// Least-squares decode: the class whose code minimizes
// sum_i (y_i^2 - code_i)^2, ties to the lowest class index.
int decode_class(const std::vector<double>& y, int class_count);

// A training or evaluation split, pre-encoded.
struct QnnBatch {
  Matrix angles;                        // encoded samples
  std::vector<std::vector<int>> codes;  // target codes, aligned with rows
  std::vector<int> labels;              // class indices, aligned with rows
  int class_count = 2;
};

// (mean loss, accuracy) where accuracy counts decode_class hits.
std::pair<double, double> qnn_evaluate(const QnnNetwork& net,
                                       const QnnBatch& batch);

// Full-batch gradient descent: each epoch averages per-sample gradients,
// applies one step, then records metrics on train (and test when given).
// Epochs are numbered from 1.
std::vector<MetricsRecord> qnn_train(QnnNetwork& net, const QnnBatch& train,
                                     const QnnBatch* test, double lr,
                                     int epochs);

// Max guarded relative error between qnn_backward and central finite
// differences (step fd_step) over every weight.
double qnn_gradient_check(const QnnNetwork& net,
                          const std::vector<double>& sample_angles,
                          const std::vector<int>& target,
                          double fd_step = 1e-6);

}  // namespace qnnbench

#endif  // QNNBENCH_QNN_HPP_
