// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/qnn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qnnbench/data.hpp"
#include "qnnbench/errors.hpp"
#include "qnnbench/rng.hpp"

namespace qnnbench {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp_amp(double h) {
  return std::clamp(h, -1.0 + kAmpClamp, 1.0 - kAmpClamp);
}

// Scratch mirroring the network shape: cached per-weight sines/cosines from
// the forward pass so backward spends no trig at all.
struct LayerScratch {
  Matrix sin_a;  // sin(phi_n + theta_mn)
  Matrix cos_a;
};

struct Workspace {
  ForwardTrace trace;
  std::vector<LayerScratch> scratch;
  std::vector<double> dphi;  // gradient w.r.t. one layer's input angles
  std::vector<double> g;     // dL/dh on the layer being walked in backward

  explicit Workspace(const QnnNetwork& net) {
    std::size_t layer_count = net.layers.size();
    trace.inputs.resize(layer_count);
    trace.outputs.resize(layer_count);
    scratch.resize(layer_count);
    std::size_t widest = 0;
    for (std::size_t l = 0; l < layer_count; ++l) {
      trace.inputs[l].resize(net.layers[l].cols);
      trace.outputs[l].resize(net.layers[l].rows);
      scratch[l].sin_a = Matrix(net.layers[l].rows, net.layers[l].cols);
      scratch[l].cos_a = Matrix(net.layers[l].rows, net.layers[l].cols);
      widest = std::max({widest, net.layers[l].cols, net.layers[l].rows});
    }
    dphi.resize(widest);
    g.resize(widest);
  }
};

// WantCos=false is the evaluation-only path: it skips the cosine cache that
// only backward reads. The sine values (and so every output) are identical
// either way.
template <bool WantCos>
void forward_into(const QnnNetwork& net, const double* angles, Workspace& ws) {
  std::size_t layer_count = net.layers.size();
  for (std::size_t l = 0; l < layer_count; ++l) {
    const Matrix& w = net.layers[l];
    std::vector<double>& in = ws.trace.inputs[l];
    if (l == 0) {
      std::copy(angles, angles + w.cols, in.begin());
    } else {
      const std::vector<double>& prev = ws.trace.outputs[l - 1];
      for (std::size_t n = 0; n < w.cols; ++n) {
        in[n] = std::asin(clamp_amp(prev[n]));
      }
    }
    for (std::size_t m = 0; m < w.rows; ++m) {
      double h = 1.0;
      for (std::size_t n = 0; n < w.cols; ++n) {
        double a = in[n] + w(m, n);
        double s = std::sin(a);
        if constexpr (WantCos) {
          ws.scratch[l].sin_a(m, n) = s;
          ws.scratch[l].cos_a(m, n) = std::cos(a);
        }
        h *= s;
      }
      ws.trace.outputs[l][m] = h;
    }
  }
}

// Adds scale * dL/dtheta into grads, assuming forward_into just ran.
void backward_into(const QnnNetwork& net, const std::vector<int>& target,
                   Workspace& ws, double scale, std::vector<Matrix>& grads) {
  std::size_t layer_count = net.layers.size();
  const std::vector<double>& y = ws.trace.outputs.back();
  if (target.size() != y.size()) {
    throw std::runtime_error("backward: target has " +
                             std::to_string(target.size()) + " bits, network " +
                             std::to_string(y.size()) + " outputs");
  }
  // dL/dh on the current layer's outputs; starts at the loss derivative.
  std::vector<double>& g = ws.g;
  for (std::size_t i = 0; i < y.size(); ++i) {
    g[i] = 4.0 * y[i] * (y[i] * y[i] - static_cast<double>(target[i]));
  }
  for (std::size_t l = layer_count; l-- > 0;) {
    const Matrix& w = net.layers[l];
    const Matrix& sin_a = ws.scratch[l].sin_a;
    const Matrix& cos_a = ws.scratch[l].cos_a;
    std::fill(ws.dphi.begin(), ws.dphi.begin() + w.cols, 0.0);
    for (std::size_t m = 0; m < w.rows; ++m) {
      // Exclusive products of the sine factors via prefix/suffix scans; no
      // division, so zero factors are handled exactly.
      double prefix = 1.0;
      double gm = g[m];
      // suffix[n] = prod_{k>n} sin_a(m,k), computed into dtheta on the fly.
      // Two passes: first store suffix products in a small stack array.
      std::size_t cols = w.cols;
      double suffix = 1.0;
      // Walk backwards once to fill suffix products into grads temp space.
      // cols is tiny (<= feature count), a local buffer is fine.
      double suf_buf[64];
      double* suf = suf_buf;
      std::vector<double> suf_heap;
      if (cols > 64) {
        suf_heap.resize(cols);
        suf = suf_heap.data();
      }
      for (std::size_t n = cols; n-- > 0;) {
        suf[n] = suffix;
        suffix *= sin_a(m, n);
      }
      for (std::size_t n = 0; n < cols; ++n) {
        double excl = prefix * suf[n];
        double dh = cos_a(m, n) * excl;  // dH_m / dtheta_mn = dH_m / dphi_n
        grads[l](m, n) += scale * gm * dh;
        ws.dphi[n] += gm * dh;
        prefix *= sin_a(m, n);
      }
    }
    if (l > 0) {
      const std::vector<double>& h_prev = ws.trace.outputs[l - 1];
      for (std::size_t n = 0; n < h_prev.size(); ++n) {
        double hc = clamp_amp(h_prev[n]);
        // d arcsin(h) / dh at the clamped amplitude.
        g[n] = ws.dphi[n] / std::sqrt(1.0 - hc * hc);
      }
    }
  }
}

std::vector<Matrix> zero_like(const QnnNetwork& net) {
  std::vector<Matrix> grads;
  grads.reserve(net.layers.size());
  for (const auto& w : net.layers) grads.emplace_back(w.rows, w.cols);
  return grads;
}

void check_batch(const QnnNetwork& net, const QnnBatch& batch,
                 const char* who) {
  if (batch.angles.rows != batch.codes.size() ||
      batch.angles.rows != batch.labels.size()) {
    throw std::runtime_error(std::string(who) + ": batch rows misaligned");
  }
  if (!net.layers.empty() && batch.angles.cols != net.layers[0].cols) {
    throw std::runtime_error(std::string(who) + ": batch has " +
                             std::to_string(batch.angles.cols) +
                             " features, network expects " +
                             std::to_string(net.layers[0].cols));
  }
}

}  // namespace

QnnNetwork make_qnn(std::size_t inputs, const std::vector<std::size_t>& hidden,
                    int output_qubits, std::uint64_t seed) {
  if (inputs == 0) throw UsageError("network needs at least one input");
  if (output_qubits < 1) throw UsageError("need at least one output qubit");
  QnnNetwork net;
  net.output_qubits = output_qubits;
  Rng rng(seed);
  std::size_t prev = inputs;
  std::vector<std::size_t> sizes = hidden;
  sizes.push_back(static_cast<std::size_t>(output_qubits));
  for (std::size_t s : sizes) {
    if (s == 0) throw UsageError("layer widths must be >= 1");
    Matrix w(s, prev);
    for (double& v : w.a) v = rng.uniform(0.0, kTwoPi);
    net.layers.push_back(std::move(w));
    prev = s;
  }
  return net;
}

double neuron_forward(const std::vector<double>& input_angles,
                      const std::vector<double>& weights) {
  if (input_angles.size() != weights.size() || input_angles.empty()) {
    throw std::runtime_error("neuron_forward: need matching nonempty inputs");
  }
  double h = 1.0;
  for (std::size_t n = 0; n < input_angles.size(); ++n) {
    h *= std::sin(input_angles[n] + weights[n]);
  }
  return h;
}

double angle_of(double h) { return std::asin(clamp_amp(h)); }

ForwardTrace qnn_forward(const QnnNetwork& net,
                         const std::vector<double>& sample_angles) {
  if (net.layers.empty()) throw std::runtime_error("forward: empty network");
  if (sample_angles.size() != net.layers[0].cols) {
    throw std::runtime_error("forward: sample has " +
                             std::to_string(sample_angles.size()) +
                             " angles, network expects " +
                             std::to_string(net.layers[0].cols));
  }
  Workspace ws(net);
  forward_into<false>(net, sample_angles.data(), ws);
  return ws.trace;
}

double qnn_loss(const std::vector<double>& y, const std::vector<int>& target) {
  if (y.size() != target.size()) {
    throw std::runtime_error("loss: output/target length mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double d = y[i] * y[i] - static_cast<double>(target[i]);
    total += d * d;
  }
  return total;
}

std::vector<Matrix> qnn_backward(const QnnNetwork& net,
                                 const ForwardTrace& trace,
                                 const std::vector<int>& target) {
  // Rebuild the cached trig from the trace inputs; callers on the hot path
  // go through qnn_train which keeps its own workspace alive instead.
  Workspace ws(net);
  ws.trace = trace;
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    const Matrix& w = net.layers[l];
    for (std::size_t m = 0; m < w.rows; ++m) {
      for (std::size_t n = 0; n < w.cols; ++n) {
        double a = trace.inputs[l][n] + w(m, n);
        ws.scratch[l].sin_a(m, n) = std::sin(a);
        ws.scratch[l].cos_a(m, n) = std::cos(a);
      }
    }
  }
  auto grads = zero_like(net);
  backward_into(net, target, ws, 1.0, grads);
  return grads;
}

void gd_step(QnnNetwork& net, const std::vector<Matrix>& grads, double lr) {
  if (lr < 0.0) throw UsageError("learning rate must be >= 0");
  if (grads.size() != net.layers.size()) {
    throw std::runtime_error("gd_step: gradient/layer count mismatch");
  }
  for (std::size_t l = 0; l < grads.size(); ++l) {
    if (!grads[l].same_shape(net.layers[l])) {
      throw std::runtime_error("gd_step: gradient shape mismatch at layer " +
                               std::to_string(l));
    }
    for (std::size_t i = 0; i < grads[l].a.size(); ++i) {
      net.layers[l].a[i] -= lr * grads[l].a[i];
    }
  }
}

std::vector<int> predict_bits(const std::vector<double>& y) {
  std::vector<int> bits(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    bits[i] = (y[i] * y[i] >= 0.5) ? 1 : 0;
  }
  return bits;
}

namespace {

int decode_against(const std::vector<double>& y,
                   const std::vector<std::vector<int>>& codes) {
  int best = 0;
  double best_dist = 0.0;
  for (std::size_t k = 0; k < codes.size(); ++k) {
    const std::vector<int>& code = codes[k];
    double dist = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      double d = y[i] * y[i] - static_cast<double>(code[i]);
      dist += d * d;
    }
    if (k == 0 || dist < best_dist) {
      best = static_cast<int>(k);
      best_dist = dist;
    }
  }
  return best;
}

std::vector<std::vector<int>> code_table(int class_count) {
  std::vector<std::vector<int>> codes;
  codes.reserve(static_cast<std::size_t>(class_count));
  for (int k = 0; k < class_count; ++k) {
    codes.push_back(label_to_code(k, class_count));
  }
  return codes;
}

}  // namespace

int decode_class(const std::vector<double>& y, int class_count) {
  int nq = output_qubit_count(class_count);
  if (static_cast<std::size_t>(nq) != y.size()) {
    throw std::runtime_error("decode_class: expected " + std::to_string(nq) +
                             " outputs for " + std::to_string(class_count) +
                             " classes, got " + std::to_string(y.size()));
  }
  return decode_against(y, code_table(class_count));
}

std::pair<double, double> qnn_evaluate(const QnnNetwork& net,
                                       const QnnBatch& batch) {
  check_batch(net, batch, "qnn_evaluate");
  if (batch.angles.rows == 0) {
    throw std::runtime_error("qnn_evaluate: empty batch");
  }
  Workspace ws(net);
  std::vector<std::vector<int>> codes = code_table(batch.class_count);
  double loss_sum = 0.0;
  std::size_t correct = 0;
  for (std::size_t r = 0; r < batch.angles.rows; ++r) {
    forward_into<false>(net, batch.angles.row(r), ws);
    const std::vector<double>& y = ws.trace.outputs.back();
    loss_sum += qnn_loss(y, batch.codes[r]);
    if (decode_against(y, codes) == batch.labels[r]) ++correct;
  }
  double n = static_cast<double>(batch.angles.rows);
  return {loss_sum / n, static_cast<double>(correct) / n};
}

std::vector<MetricsRecord> qnn_train(QnnNetwork& net, const QnnBatch& train,
                                     const QnnBatch* test, double lr,
                                     int epochs) {
  check_batch(net, train, "qnn_train");
  if (epochs < 1) throw UsageError("epochs must be >= 1");
  if (train.angles.rows == 0) throw std::runtime_error("qnn_train: no samples");

  std::vector<MetricsRecord> metrics;
  metrics.reserve(static_cast<std::size_t>(epochs) * (test ? 2 : 1));
  Workspace ws(net);
  auto grads = zero_like(net);
  double inv_batch = 1.0 / static_cast<double>(train.angles.rows);
  for (int epoch = 1; epoch <= epochs; ++epoch) {
    for (auto& g : grads) std::fill(g.a.begin(), g.a.end(), 0.0);
    for (std::size_t r = 0; r < train.angles.rows; ++r) {
      forward_into<true>(net, train.angles.row(r), ws);
      backward_into(net, train.codes[r], ws, inv_batch, grads);
    }
    gd_step(net, grads, lr);
    auto [train_loss, train_acc] = qnn_evaluate(net, train);
    metrics.push_back({epoch, Split::kTrain, train_loss, train_acc});
    if (test) {
      auto [test_loss, test_acc] = qnn_evaluate(net, *test);
      metrics.push_back({epoch, Split::kTest, test_loss, test_acc});
    }
  }
  return metrics;
}

double qnn_gradient_check(const QnnNetwork& net,
                          const std::vector<double>& sample_angles,
                          const std::vector<int>& target, double fd_step) {
  ForwardTrace trace = qnn_forward(net, sample_angles);
  std::vector<Matrix> analytic = qnn_backward(net, trace, target);
  QnnNetwork probe = net;
  double worst = 0.0;
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    for (std::size_t i = 0; i < net.layers[l].a.size(); ++i) {
      double saved = probe.layers[l].a[i];
      probe.layers[l].a[i] = saved + fd_step;
      double up = qnn_loss(qnn_forward(probe, sample_angles).y(), target);
      probe.layers[l].a[i] = saved - fd_step;
      double down = qnn_loss(qnn_forward(probe, sample_angles).y(), target);
      probe.layers[l].a[i] = saved;
      double fd = (up - down) / (2.0 * fd_step);
      double an = analytic[l].a[i];
      // Guarded denominator: near-zero gradients would otherwise turn
      // finite-difference noise (about 1e-10 here) into huge ratios.
      double rel =
          std::abs(fd - an) / std::max({std::abs(fd), std::abs(an), 1e-4});
      worst = std::max(worst, rel);
    }
  }
  return worst;
}

}  // namespace qnnbench
