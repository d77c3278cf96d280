// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QNNBENCH_ERRORS_HPP_
#define QNNBENCH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qnnbench {

// Bad command line or config values. CLI maps this to exit code 1.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (CSV contents, run directories).
// CLI maps this to exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Everything else thrown as std::runtime_error maps to exit code 3.

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitRuntime = 3;

}  // namespace qnnbench

#endif  // QNNBENCH_ERRORS_HPP_
