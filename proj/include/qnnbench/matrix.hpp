// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QNNBENCH_MATRIX_HPP_
#define QNNBENCH_MATRIX_HPP_

#include <cstddef>
#include <vector>

namespace qnnbench {

// Row-major dense matrix of doubles. Deliberately minimal: the models here
// only need element access, shapes, and row views.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), a(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }

  const double* row(std::size_t r) const { return a.data() + r * cols; }
  double* row(std::size_t r) { return a.data() + r * cols; }

  std::vector<double> row_vec(std::size_t r) const {
    return std::vector<double>(row(r), row(r) + cols);
  }

  bool same_shape(const Matrix& o) const {
    return rows == o.rows && cols == o.cols;
  }
};

}  // namespace qnnbench

#endif  // QNNBENCH_MATRIX_HPP_
