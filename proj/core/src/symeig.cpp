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

#include "qnr/symeig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qnr/error.hpp"

namespace qnr {

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

RealMatrix RealMatrix::transposed() const {
  RealMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double RealMatrix::frobenius() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double RealMatrix::asymmetry() const {
  if (rows_ != cols_) throw DimensionError("asymmetry: matrix is not square");
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      worst = std::max(worst, std::fabs((*this)(r, c) - (*this)(c, r)));
  return worst;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("RealMatrix product: shape mismatch");
  RealMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double v = a(r, k);
      if (v == 0.0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += v * b(k, c);
    }
  return out;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("RealMatrix sum: shape mismatch");
  RealMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

RealMatrix operator*(double s, const RealMatrix& a) {
  RealMatrix out = a;
  for (double& v : out.data_) v *= s;
  return out;
}

std::vector<double> multiply(const RealMatrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw DimensionError("RealMatrix * vector: shape mismatch");
  std::vector<double> y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto row = a.row(r);
    double s = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) s += row[c] * x[c];
    y[r] = s;
  }
  return y;
}

SymSpectrum sym_eig(const RealMatrix& m, const JacobiOptions& options) {
  if (m.rows() != m.cols()) throw DimensionError("sym_eig: matrix is not square");
  const std::size_t n = m.rows();
  const double scale = m.frobenius();
  if (m.asymmetry() > 1e-12 * std::max(1.0, scale)) {
    throw DomainError("sym_eig: matrix is not symmetric");
  }

  RealMatrix a = m;
  // Symmetrize exactly so rotations act on a consistent matrix.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) a(r, c) = a(c, r) = 0.5 * (a(r, c) + a(c, r));
  RealMatrix v = options.vectors ? RealMatrix::identity(n) : RealMatrix{};

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) s += 2.0 * a(r, c) * a(r, c);
    return std::sqrt(s);
  };

  const double target = options.off_tolerance * scale;
  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    if (off_norm() <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        if (options.vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v(k, p);
            const double vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  if (sweep == options.max_sweeps && off_norm() > target) {
    throw NumericalError("sym_eig: Jacobi did not converge in " + std::to_string(sweep) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SymSpectrum out;
  out.sweeps = sweep;
  out.eigenvalues.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.eigenvalues[k] = a(order[k], order[k]);
  if (options.vectors) {
    out.eigenvectors = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    std::vector<double> col(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) col[r] = out.eigenvectors(r, k);
      const auto mv = multiply(m, col);
      double res = 0.0;
      for (std::size_t r = 0; r < n; ++r) {
        const double d = mv[r] - out.eigenvalues[k] * col[r];
        res += d * d;
      }
      out.residual = std::max(out.residual, std::sqrt(res));
    }
    if (out.residual > options.residual_tolerance * (1.0 + scale)) {
      throw NumericalError("sym_eig: residual above tolerance");
    }
  }
  return out;
}

double sym_eig_max(const RealMatrix& m) {
  if (m.rows() == 0) throw DimensionError("sym_eig_max: empty matrix");
  return sym_eig(m).eigenvalues.back();
}

std::pair<double, std::vector<double>> sym_eig_max_vector(const RealMatrix& m) {
  if (m.rows() == 0) throw DimensionError("sym_eig_max_vector: empty matrix");
  const SymSpectrum s = sym_eig(m);
  const std::size_t n = m.rows();
  std::vector<double> v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = s.eigenvectors(r, n - 1);
  return {s.eigenvalues.back(), std::move(v)};
}

}  // namespace qnr
