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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "qnr/quaternion.hpp"
#include "qnr/qvector.hpp"
#include "qnr/symeig.hpp"

namespace qnr {

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

/// Dense n x n quaternionic matrix acting on columns of H^n from the left;
/// the operator x -> T x is right H-linear.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), data_(n * n) {}
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Quaternion> entries);
  static QMatrix diagonal(std::initializer_list<Quaternion> entries);

  std::size_t size() const { return n_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator*(double s, const QMatrix& a);

/// T x.
QVector apply(const QMatrix& t, std::span<const Quaternion> x);

/// <T x, x>.
Quaternion quadratic_value(const QMatrix& t, std::span<const Quaternion> x);

/// Conjugate transpose.
QMatrix adjoint(const QMatrix& a);
/// (A + A*) / 2.
QMatrix hermitian_part(const QMatrix& a);
bool is_hermitian(const QMatrix& a, double tolerance = 0.0);
/// a T + b I for real a, b.
QMatrix affine(const QMatrix& t, double a, double b);
/// diag(a, b).
QMatrix direct_sum(const QMatrix& a, const QMatrix& b);
/// The square sub-matrix on `indices`.
QMatrix principal_submatrix(const QMatrix& t, std::span<const std::size_t> indices);

double frobenius(const QMatrix& a);

/// 4n x 4n real matrix of x -> A x on R^{4n}; real_rep(AB) = real_rep(A) real_rep(B).
RealMatrix real_rep(const QMatrix& a);

/// 2n x 2n complex adjoint [[A1, A2], [-conj(A2), conj(A1)]] for A = A1 + A2 j.
ComplexMatrix complex_rep(const QMatrix& a);

/// T^2 - 2 Re(q) T + |q|^2 I.
QMatrix delta(const QMatrix& t, const Quaternion& q);

/// Smallest singular value of `a` as an operator on R^{4n}.
double smallest_singular_value(const QMatrix& a);

/// Entries i.i.d. with standard Gaussian coordinates.
template <class Rng>
QMatrix random_matrix(std::size_t n, Rng& rng, double scale = 1.0) {
  std::normal_distribution<double> gauss;
  QMatrix t(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      t(r, c) = Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)} * scale;
  return t;
}

}  // namespace qnr
