// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include "qnnbench/statevec.hpp"

#include <catch2/catch.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qnnbench/qnn.hpp"
#include "qnnbench/rng.hpp"

using namespace qnnbench;

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("product state of no inputs plus target is |0>", "[statevec]") {
  StateVector s = init_product_state({}, true);
  REQUIRE(s.qubit_count == 1);
  REQUIRE(s.amps.size() == 2);
  CHECK(s.amps[0] == std::complex<double>(1.0, 0.0));
  CHECK(s.amps[1] == std::complex<double>(0.0, 0.0));
}

TEST_CASE("product state of a pi/2 qubit is |1>", "[statevec]") {
  StateVector s = init_product_state({kPi / 2}, false);
  REQUIRE(s.amps.size() == 2);
  CHECK(std::abs(s.amps[0]) == Approx(0.0).margin(1e-12));
  CHECK(s.amps[1].real() == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("two pi/4 qubits give four equal amplitudes", "[statevec]") {
  StateVector s = init_product_state({kPi / 4, kPi / 4}, false);
  REQUIRE(s.amps.size() == 4);
  for (const auto& a : s.amps) {
    CHECK(a.real() == Approx(0.5).epsilon(1e-14));
    CHECK(a.imag() == 0.0);
  }
}

TEST_CASE("the qubit budget is enforced", "[statevec]") {
  std::vector<double> over(kMaxQubits, 0.0);
  CHECK_THROWS_AS(init_product_state(over, true), std::runtime_error);
  CHECK_THROWS_AS(init_product_state(std::vector<double>(kMaxQubits + 1, 0.0),
                                     false),
                  std::runtime_error);
  StateVector ok = init_product_state(std::vector<double>(10, 0.0), true);
  CHECK(ok.qubit_count == 11);
}

TEST_CASE("rotation by zero is the identity", "[statevec]") {
  StateVector s = init_product_state({0.3, 1.2}, false);
  StateVector r = apply_rotation(s, 0.0, 1);
  REQUIRE(r.amps.size() == s.amps.size());
  for (std::size_t i = 0; i < s.amps.size(); ++i) {
    CHECK(r.amps[i] == s.amps[i]);
  }
}

TEST_CASE("rotation by pi/2 flips |0> to |1>", "[statevec]") {
  StateVector s = init_product_state({0.0}, false);
  StateVector r = apply_rotation(s, kPi / 2, 0);
  CHECK(std::abs(r.amps[0]) == Approx(0.0).margin(1e-12));
  CHECK(r.amps[1].real() == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("successive rotations add their angles", "[statevec][property]") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    double alpha = rng.uniform(-3.0, 3.0);
    double beta = rng.uniform(-3.0, 3.0);
    StateVector s = init_product_state({rng.uniform(0.0, 2 * kPi)}, false);
    StateVector two = apply_rotation(apply_rotation(s, alpha, 0), beta, 0);
    StateVector one = apply_rotation(s, alpha + beta, 0);
    for (std::size_t k = 0; k < s.amps.size(); ++k) {
      CHECK(std::abs(two.amps[k] - one.amps[k]) < 1e-12);
    }
  }
}

TEST_CASE("gates preserve the norm", "[statevec][property]") {
  Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    std::vector<double> angles = {rng.uniform(0.0, 2 * kPi),
                                  rng.uniform(0.0, 2 * kPi),
                                  rng.uniform(0.0, 2 * kPi)};
    StateVector s = init_product_state(angles, true);
    CHECK(norm_squared(s) == Approx(1.0).margin(1e-12));
    s = apply_rotation(std::move(s), rng.uniform(-6.0, 6.0), 1);
    CHECK(norm_squared(s) == Approx(1.0).margin(1e-12));
    s = apply_multi_controlled_x(std::move(s), {0, 1, 2}, 3);
    CHECK(norm_squared(s) == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("rotation rejects a bad target index", "[statevec]") {
  StateVector s = init_product_state({0.1}, false);
  CHECK_THROWS_AS(apply_rotation(s, 1.0, 1), std::runtime_error);
  CHECK_THROWS_AS(apply_rotation(s, 1.0, -1), std::runtime_error);
}

TEST_CASE("multi-controlled X flips only when every control is set",
          "[statevec]") {
  // |11>|0>: both controls at pi/2, target appended as |0>.
  StateVector s = init_product_state({kPi / 2, kPi / 2}, true);
  StateVector f = apply_multi_controlled_x(s, {0, 1}, 2);
  // Basis index 3 = |011> (target clear) moves to 7 = |111>.
  CHECK(std::abs(f.amps[3]) == Approx(0.0).margin(1e-12));
  CHECK(std::abs(f.amps[7]) == Approx(1.0).margin(1e-12));

  // |10>|0>: one control clear, nothing moves.
  StateVector u = init_product_state({0.0, kPi / 2}, true);
  StateVector g = apply_multi_controlled_x(u, {0, 1}, 2);
  for (std::size_t i = 0; i < u.amps.size(); ++i) {
    CHECK(g.amps[i] == u.amps[i]);
  }
}

TEST_CASE("multi-controlled X is an exact involution", "[statevec][property]") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    std::vector<double> angles = {rng.uniform(0.0, 2 * kPi),
                                  rng.uniform(0.0, 2 * kPi),
                                  rng.uniform(0.0, 2 * kPi)};
    StateVector s = init_product_state(angles, true);
    StateVector twice = apply_multi_controlled_x(
        apply_multi_controlled_x(s, {0, 1, 2}, 3), {0, 1, 2}, 3);
    for (std::size_t k = 0; k < s.amps.size(); ++k) {
      CHECK(twice.amps[k] == s.amps[k]);  // element-wise exact
    }
  }
}

TEST_CASE("multi-controlled X rejects overlapping indices", "[statevec]") {
  StateVector s = init_product_state({0.1, 0.2}, true);
  CHECK_THROWS_AS(apply_multi_controlled_x(s, {0, 0}, 2), std::runtime_error);
  CHECK_THROWS_AS(apply_multi_controlled_x(s, {0, 2}, 2), std::runtime_error);
  CHECK_THROWS_AS(apply_multi_controlled_x(s, {0, 1}, 3), std::runtime_error);
}

TEST_CASE("prob_qubit_one matches the Born rule", "[statevec]") {
  StateVector one = init_product_state({kPi / 2}, false);
  CHECK(prob_qubit_one(one, 0) == Approx(1.0).epsilon(1e-15));

  double theta = 0.7;
  StateVector s = init_product_state({theta}, false);
  CHECK(prob_qubit_one(s, 0) ==
        Approx(std::sin(theta) * std::sin(theta)).epsilon(1e-15));

  StateVector two = init_product_state({kPi / 4, kPi / 4}, false);
  CHECK(prob_qubit_one(two, 0) == Approx(0.5).epsilon(1e-14));
}

TEST_CASE("neuron_oracle hits the closed-form corner cases", "[statevec]") {
  // every rotated angle at pi/2 -> probability 1
  CHECK(neuron_oracle({kPi / 2, kPi / 4}, {0.0, kPi / 4}) ==
        Approx(1.0).margin(1e-12));
  // one rotated angle at 0 -> probability 0
  CHECK(neuron_oracle({0.0, 1.1}, {0.0, 0.4}) == Approx(0.0).margin(1e-12));
  // two pi/4 qubits, identity weights -> 1/4
  CHECK(neuron_oracle({kPi / 4, kPi / 4}, {0.0, 0.0}) ==
        Approx(0.25).margin(1e-12));
}

TEST_CASE("neuron_oracle equals the squared sine product",
          "[statevec][property]") {
  Rng rng(23);
  for (int n = 1; n <= 6; ++n) {
    for (int draw = 0; draw < 25; ++draw) {
      std::vector<double> phi(n), w(n);
      for (double& v : phi) v = rng.uniform(0.0, 2 * kPi);
      for (double& v : w) v = rng.uniform(0.0, 2 * kPi);
      double h = neuron_forward(phi, w);
      CHECK(neuron_oracle(phi, w) == Approx(h * h).margin(1e-12));
    }
  }
}
