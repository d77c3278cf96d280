// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qnnbench/errors.hpp"
#include "qnnbench/rng.hpp"

namespace qnnbench {

namespace {

double activate(double z, MlpActivation act) {
  return act == MlpActivation::kSigmoid ? 1.0 / (1.0 + std::exp(-z))
                                        : std::tanh(z);
}

// Derivative expressed through the activation value.
double activate_grad(double a, MlpActivation act) {
  return act == MlpActivation::kSigmoid ? a * (1.0 - a) : 1.0 - a * a;
}

// Activations per layer: activations[0] is the input, the last entry is the
// softmax output.
struct MlpTrace {
  std::vector<std::vector<double>> activations;
};

void forward_trace(const MlpNetwork& net, const std::vector<double>& x,
                   MlpTrace& trace) {
  std::size_t layer_count = net.weights.size();
  trace.activations.resize(layer_count + 1);
  trace.activations[0] = x;
  for (std::size_t l = 0; l < layer_count; ++l) {
    const Matrix& w = net.weights[l];
    const std::vector<double>& in = trace.activations[l];
    if (in.size() != w.cols) {
      throw std::runtime_error("mlp forward: layer " + std::to_string(l) +
                               " expects " + std::to_string(w.cols) +
                               " inputs, got " + std::to_string(in.size()));
    }
    std::vector<double>& out = trace.activations[l + 1];
    out.assign(w.rows, 0.0);
    for (std::size_t m = 0; m < w.rows; ++m) {
      double z = net.biases[l][m];
      for (std::size_t n = 0; n < w.cols; ++n) z += w(m, n) * in[n];
      out[m] = z;
    }
    if (l + 1 < layer_count) {
      for (double& v : out) v = activate(v, net.activation);
    } else {
      // Softmax with the usual max shift for stability.
      double zmax = *std::max_element(out.begin(), out.end());
      double sum = 0.0;
      for (double& v : out) {
        v = std::exp(v - zmax);
        sum += v;
      }
      for (double& v : out) v /= sum;
    }
  }
}

void check_label(int label, std::size_t outputs) {
  if (label < 0 || static_cast<std::size_t>(label) >= outputs) {
    throw std::runtime_error("label " + std::to_string(label) +
                             " out of range for " + std::to_string(outputs) +
                             " outputs");
  }
}

// Adds scale * dL/dparam into grads, assuming forward_trace just ran.
void backward_into(const MlpNetwork& net, const MlpTrace& trace, int label,
                   double scale, MlpGradients& grads) {
  std::size_t layer_count = net.weights.size();
  const std::vector<double>& probs = trace.activations[layer_count];
  check_label(label, probs.size());

  // Delta on the output logits. Cross-entropy + softmax collapses to
  // p - onehot; squared error needs the softmax Jacobian.
  std::vector<double> delta(probs.size());
  if (net.loss == MlpLoss::kCrossEntropy) {
    for (std::size_t i = 0; i < probs.size(); ++i) {
      delta[i] = probs[i] - (static_cast<int>(i) == label ? 1.0 : 0.0);
    }
  } else {
    double dot = 0.0;
    std::vector<double> dp(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
      double t = (static_cast<int>(i) == label) ? 1.0 : 0.0;
      dp[i] = 2.0 * (probs[i] - t);
      dot += dp[i] * probs[i];
    }
    for (std::size_t i = 0; i < probs.size(); ++i) {
      delta[i] = probs[i] * (dp[i] - dot);
    }
  }

  for (std::size_t l = layer_count; l-- > 0;) {
    const std::vector<double>& in = trace.activations[l];
    for (std::size_t m = 0; m < net.weights[l].rows; ++m) {
      grads.biases[l][m] += scale * delta[m];
      for (std::size_t n = 0; n < net.weights[l].cols; ++n) {
        grads.weights[l](m, n) += scale * delta[m] * in[n];
      }
    }
    if (l > 0) {
      std::vector<double> prev(net.weights[l].cols, 0.0);
      for (std::size_t n = 0; n < net.weights[l].cols; ++n) {
        double acc = 0.0;
        for (std::size_t m = 0; m < net.weights[l].rows; ++m) {
          acc += net.weights[l](m, n) * delta[m];
        }
        prev[n] = acc * activate_grad(in[n], net.activation);
      }
      delta = std::move(prev);
    }
  }
}

MlpGradients zero_like(const MlpNetwork& net) {
  MlpGradients g;
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    g.weights.emplace_back(net.weights[l].rows, net.weights[l].cols);
    g.biases.emplace_back(net.biases[l].size(), 0.0);
  }
  return g;
}

void check_batch(const MlpNetwork& net, const MlpBatch& batch,
                 const char* who) {
  if (batch.features.rows != batch.labels.size()) {
    throw std::runtime_error(std::string(who) + ": batch rows misaligned");
  }
  if (!net.weights.empty() && batch.features.cols != net.weights[0].cols) {
    throw std::runtime_error(std::string(who) + ": feature width mismatch");
  }
}

}  // namespace

MlpNetwork make_mlp(std::size_t inputs, const std::vector<std::size_t>& hidden,
                    std::size_t outputs, std::uint64_t seed,
                    MlpActivation activation, MlpLoss loss) {
  if (inputs == 0 || outputs == 0) {
    throw UsageError("network needs at least one input and one output");
  }
  MlpNetwork net;
  net.activation = activation;
  net.loss = loss;
  Rng rng(seed);
  std::vector<std::size_t> sizes = hidden;
  sizes.push_back(outputs);
  std::size_t prev = inputs;
  for (std::size_t s : sizes) {
    if (s == 0) throw UsageError("layer widths must be >= 1");
    Matrix w(s, prev);
    for (double& v : w.a) v = rng.uniform(-0.5, 0.5);
    std::vector<double> b(s);
    for (double& v : b) v = rng.uniform(-0.5, 0.5);
    net.weights.push_back(std::move(w));
    net.biases.push_back(std::move(b));
    prev = s;
  }
  return net;
}

std::vector<double> mlp_forward(const MlpNetwork& net,
                                const std::vector<double>& features) {
  MlpTrace trace;
  forward_trace(net, features, trace);
  return trace.activations.back();
}

double mlp_loss_value(const MlpNetwork& net, const std::vector<double>& probs,
                      int label) {
  check_label(label, probs.size());
  if (net.loss == MlpLoss::kCrossEntropy) {
    return -std::log(std::max(probs[label], 1e-300));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    double t = (static_cast<int>(i) == label) ? 1.0 : 0.0;
    double d = probs[i] - t;
    total += d * d;
  }
  return total;
}

MlpGradients mlp_backward(const MlpNetwork& net,
                          const std::vector<double>& features, int label) {
  MlpTrace trace;
  forward_trace(net, features, trace);
  MlpGradients grads = zero_like(net);
  backward_into(net, trace, label, 1.0, grads);
  return grads;
}

std::pair<double, double> mlp_evaluate(const MlpNetwork& net,
                                       const MlpBatch& batch) {
  check_batch(net, batch, "mlp_evaluate");
  if (batch.features.rows == 0) {
    throw std::runtime_error("mlp_evaluate: empty batch");
  }
  MlpTrace trace;
  double loss_sum = 0.0;
  std::size_t correct = 0;
  for (std::size_t r = 0; r < batch.features.rows; ++r) {
    forward_trace(net, batch.features.row_vec(r), trace);
    const std::vector<double>& probs = trace.activations.back();
    loss_sum += mlp_loss_value(net, probs, batch.labels[r]);
    std::size_t arg = static_cast<std::size_t>(
        std::max_element(probs.begin(), probs.end()) - probs.begin());
    if (static_cast<int>(arg) == batch.labels[r]) ++correct;
  }
  double n = static_cast<double>(batch.features.rows);
  return {loss_sum / n, static_cast<double>(correct) / n};
}

std::vector<MetricsRecord> mlp_train(MlpNetwork& net, const MlpBatch& train,
                                     const MlpBatch* test, double lr,
                                     int epochs) {
  check_batch(net, train, "mlp_train");
  if (epochs < 1) throw UsageError("epochs must be >= 1");
  if (lr < 0.0) throw UsageError("learning rate must be >= 0");
  if (train.features.rows == 0) {
    throw std::runtime_error("mlp_train: no samples");
  }
  std::vector<MetricsRecord> metrics;
  metrics.reserve(static_cast<std::size_t>(epochs) * (test ? 2 : 1));
  MlpTrace trace;
  MlpGradients grads = zero_like(net);
  double inv_batch = 1.0 / static_cast<double>(train.features.rows);
  for (int epoch = 1; epoch <= epochs; ++epoch) {
    for (auto& g : grads.weights) std::fill(g.a.begin(), g.a.end(), 0.0);
    for (auto& g : grads.biases) std::fill(g.begin(), g.end(), 0.0);
    for (std::size_t r = 0; r < train.features.rows; ++r) {
      forward_trace(net, train.features.row_vec(r), trace);
      backward_into(net, trace, train.labels[r], inv_batch, grads);
    }
    for (std::size_t l = 0; l < net.weights.size(); ++l) {
      for (std::size_t i = 0; i < net.weights[l].a.size(); ++i) {
        net.weights[l].a[i] -= lr * grads.weights[l].a[i];
      }
      for (std::size_t i = 0; i < net.biases[l].size(); ++i) {
        net.biases[l][i] -= lr * grads.biases[l][i];
      }
    }
    auto [train_loss, train_acc] = mlp_evaluate(net, train);
    metrics.push_back({epoch, Split::kTrain, train_loss, train_acc});
    if (test) {
      auto [test_loss, test_acc] = mlp_evaluate(net, *test);
      metrics.push_back({epoch, Split::kTest, test_loss, test_acc});
    }
  }
  return metrics;
}

double mlp_gradient_check(const MlpNetwork& net,
                          const std::vector<double>& features, int label,
                          double fd_step) {
  MlpGradients analytic = mlp_backward(net, features, label);
  MlpNetwork probe = net;
  double worst = 0.0;
  auto guarded = [](double fd, double an) {
    return std::abs(fd - an) / std::max({std::abs(fd), std::abs(an), 1e-4});
  };
  auto loss_at = [&](const MlpNetwork& n) {
    return mlp_loss_value(n, mlp_forward(n, features), label);
  };
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    for (std::size_t i = 0; i < net.weights[l].a.size(); ++i) {
      double saved = probe.weights[l].a[i];
      probe.weights[l].a[i] = saved + fd_step;
      double up = loss_at(probe);
      probe.weights[l].a[i] = saved - fd_step;
      double down = loss_at(probe);
      probe.weights[l].a[i] = saved;
      worst = std::max(
          worst, guarded((up - down) / (2.0 * fd_step), analytic.weights[l].a[i]));
    }
    for (std::size_t i = 0; i < net.biases[l].size(); ++i) {
      double saved = probe.biases[l][i];
      probe.biases[l][i] = saved + fd_step;
      double up = loss_at(probe);
      probe.biases[l][i] = saved - fd_step;
      double down = loss_at(probe);
      probe.biases[l][i] = saved;
      worst = std::max(
          worst, guarded((up - down) / (2.0 * fd_step), analytic.biases[l][i]));
    }
  }
  return worst;
}

}  // namespace qnnbench
