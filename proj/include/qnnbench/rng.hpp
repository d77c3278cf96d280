// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QNNBENCH_RNG_HPP_
#define QNNBENCH_RNG_HPP_

#include <cstdint>
#include <random>

namespace qnnbench {

// Seeded PRNG with a hand-rolled uniform double so streams are identical
// across standard library implementations (std::uniform_real_distribution
// is not pinned by the standard, mt19937_64 is).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n > 0. Rejection-free modulo is fine here:
  // n is tiny compared to 2^64, bias is unobservable.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qnnbench

#endif  // QNNBENCH_RNG_HPP_
