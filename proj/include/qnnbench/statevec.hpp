// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0
//
// Small dense state-vector simulator used as an independent correctness
// oracle for the sine-product neuron. Not on the training hot path.

#ifndef QNNBENCH_STATEVEC_HPP_
#define QNNBENCH_STATEVEC_HPP_

#include <complex>
#include <vector>

namespace qnnbench {

// Dense simulation bound; the oracle only needs neuron-scale circuits.
inline constexpr int kMaxQubits = 24;

// 2^n complex amplitudes. Qubit 0 is the least significant bit of the
// basis-state index.
struct StateVector {
  int qubit_count = 0;
  std::vector<std::complex<double>> amps;
};

// Tensor product of per-qubit (cos a_i, sin a_i) states, optionally with one
// trailing |0> target qubit. Throws on more than kMaxQubits qubits.
StateVector init_product_state(const std::vector<double>& angles,
                               bool plus_target);

// Applies R(theta) = [[cos, -sin], [sin, cos]] to the target qubit.
StateVector apply_rotation(StateVector state, double theta, int target);

// Flips the target qubit on exactly those basis states where every control
// bit is 1. Controls and target must be distinct valid indices.
StateVector apply_multi_controlled_x(StateVector state,
                                     const std::vector<int>& controls,
                                     int target);

// Born-rule probability of measuring |1> on one qubit.
double prob_qubit_one(const StateVector& state, int qubit);

// Full circuit for one neuron: product state from the input angles plus a
// |0> target, R(weight_n) on each input qubit, one multi-controlled-X onto
// the target, then the target's |1> probability. Equals the squared
// sine-product output of the analytic neuron.
double neuron_oracle(const std::vector<double>& input_angles,
                     const std::vector<double>& weights);

// Sum of |amplitude|^2, used by the unitarity checks.
double norm_squared(const StateVector& state);

}  // namespace qnnbench

#endif  // QNNBENCH_STATEVEC_HPP_
