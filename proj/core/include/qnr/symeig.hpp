// Copyright 2026 The qnumrange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace qnr {

/// Dense row-major real matrix.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> data() const { return data_; }

  RealMatrix transposed() const;
  double frobenius() const;
  /// Largest |A - A^T| entry.
  double asymmetry() const;

  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
  friend RealMatrix operator*(double s, const RealMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> multiply(const RealMatrix& a, std::span<const double> x);

/// Eigen-decomposition of a real symmetric matrix.
struct SymSpectrum {
  std::vector<double> eigenvalues;  // nondecreasing
  RealMatrix eigenvectors;          // column c pairs with eigenvalues[c]; empty if not requested
  double residual = 0.0;            // max |M v - lambda v| over returned pairs
  int sweeps = 0;
};

struct JacobiOptions {
  double off_tolerance = 1e-11;  // relative to |M|_F
  int max_sweeps = 100;
  bool vectors = true;
  /// Residual bound, relative: residual <= tolerance * (1 + |M|_F).
  double residual_tolerance = 1e-9;
};

/// Cyclic Jacobi. Throws DomainError if `m` is not symmetric to 1e-12
/// (relative) and NumericalError if the sweep limit or the residual bound is
/// exceeded.
SymSpectrum sym_eig(const RealMatrix& m, const JacobiOptions& options = {});

/// Largest eigenvalue of a real symmetric matrix.
double sym_eig_max(const RealMatrix& m);

/// Largest eigenvalue and one unit eigenvector for it.
std::pair<double, std::vector<double>> sym_eig_max_vector(const RealMatrix& m);

}  // namespace qnr
