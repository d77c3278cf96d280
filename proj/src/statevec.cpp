// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/statevec.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace qnnbench {

namespace {

void check_qubit(const StateVector& state, int qubit, const char* who) {
  if (qubit < 0 || qubit >= state.qubit_count) {
    throw std::runtime_error(std::string(who) + ": qubit index " +
                             std::to_string(qubit) + " out of range for " +
                             std::to_string(state.qubit_count) + " qubits");
  }
}

}  // namespace

StateVector init_product_state(const std::vector<double>& angles,
                               bool plus_target) {
  int n = static_cast<int>(angles.size()) + (plus_target ? 1 : 0);
  if (n > kMaxQubits) {
    throw std::runtime_error("init_product_state: " + std::to_string(n) +
                             " qubits exceeds the dense limit of " +
                             std::to_string(kMaxQubits));
  }
  StateVector state;
  state.qubit_count = n;
  state.amps.assign(std::size_t{1} << n, {0.0, 0.0});
  state.amps[0] = {1.0, 0.0};
  // Build the product state one qubit at a time; qubit i lives at bit i.
  for (std::size_t i = 0; i < angles.size(); ++i) {
    double c = std::cos(angles[i]);
    double s = std::sin(angles[i]);
    std::size_t stride = std::size_t{1} << i;
    for (std::size_t base = 0; base < (std::size_t{1} << i); ++base) {
      auto amp = state.amps[base];
      state.amps[base] = amp * c;
      state.amps[base + stride] = amp * s;
    }
  }
  // The optional target qubit is the highest index and stays |0>.
  return state;
}

StateVector apply_rotation(StateVector state, double theta, int target) {
  check_qubit(state, target, "apply_rotation");
  double c = std::cos(theta);
  double s = std::sin(theta);
  std::size_t mask = std::size_t{1} << target;
  for (std::size_t idx = 0; idx < state.amps.size(); ++idx) {
    if (idx & mask) continue;
    auto a0 = state.amps[idx];
    auto a1 = state.amps[idx | mask];
    state.amps[idx] = a0 * c - a1 * s;
    state.amps[idx | mask] = a0 * s + a1 * c;
  }
  return state;
}

StateVector apply_multi_controlled_x(StateVector state,
                                     const std::vector<int>& controls,
                                     int target) {
  check_qubit(state, target, "apply_multi_controlled_x");
  std::size_t control_mask = 0;
  for (int c : controls) {
    check_qubit(state, c, "apply_multi_controlled_x");
    if (c == target || (control_mask & (std::size_t{1} << c))) {
      throw std::runtime_error(
          "apply_multi_controlled_x: duplicate or overlapping qubit index " +
          std::to_string(c));
    }
    control_mask |= std::size_t{1} << c;
  }
  std::size_t target_mask = std::size_t{1} << target;
  for (std::size_t idx = 0; idx < state.amps.size(); ++idx) {
    if ((idx & target_mask) || (idx & control_mask) != control_mask) continue;
    std::swap(state.amps[idx], state.amps[idx | target_mask]);
  }
  return state;
}

double prob_qubit_one(const StateVector& state, int qubit) {
  check_qubit(state, qubit, "prob_qubit_one");
  std::size_t mask = std::size_t{1} << qubit;
  double p = 0.0;
  for (std::size_t idx = 0; idx < state.amps.size(); ++idx) {
    if (idx & mask) p += std::norm(state.amps[idx]);
  }
  return p;
}

double neuron_oracle(const std::vector<double>& input_angles,
                     const std::vector<double>& weights) {
  if (input_angles.size() != weights.size()) {
    throw std::runtime_error("neuron_oracle: angle/weight length mismatch");
  }
  StateVector state = init_product_state(input_angles, /*plus_target=*/true);
  int n = static_cast<int>(input_angles.size());
  std::vector<int> controls(n);
  for (int i = 0; i < n; ++i) {
    state = apply_rotation(std::move(state), weights[i], i);
    controls[i] = i;
  }
  state = apply_multi_controlled_x(std::move(state), controls, n);
  return prob_qubit_one(state, n);
}

double norm_squared(const StateVector& state) {
  double total = 0.0;
  for (const auto& amp : state.amps) total += std::norm(amp);
  return total;
}

}  // namespace qnnbench
