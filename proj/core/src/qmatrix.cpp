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

#include "qnr/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qnr/error.hpp"

namespace qnr {

namespace {

void check_same(const QMatrix& a, const QMatrix& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": size mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : n_(rows.size()), data_(rows.size() * rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionError("QMatrix: rows must form a square matrix");
    std::size_t c = 0;
    for (const auto& q : row) (*this)(r, c++) = q;
    ++r;
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Quaternion{1.0};
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> entries) {
  QMatrix m(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) m(k, k) = entries[k];
  return m;
}

QMatrix QMatrix::diagonal(std::initializer_list<Quaternion> entries) {
  return diagonal(std::span<const Quaternion>(entries.begin(), entries.size()));
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  check_same(a, b, "QMatrix +");
  QMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  check_same(a, b, "QMatrix -");
  QMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  check_same(a, b, "QMatrix *");
  const std::size_t n = a.size();
  QMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Quaternion& ark = a(r, k);
      if (ark == Quaternion{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

QMatrix operator*(double s, const QMatrix& a) {
  QMatrix out = a;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) *= s;
  return out;
}

QVector apply(const QMatrix& t, std::span<const Quaternion> x) {
  if (x.size() != t.size()) throw DimensionError("apply: dimension mismatch");
  const std::size_t n = t.size();
  QVector y(n);
  for (std::size_t r = 0; r < n; ++r) {
    Quaternion s;
    for (std::size_t c = 0; c < n; ++c) s += t(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

Quaternion quadratic_value(const QMatrix& t, std::span<const Quaternion> x) {
  const QVector tx = apply(t, x);
  return inner(tx, x);
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(c, r) = conj(a(r, c));
  return out;
}

QMatrix hermitian_part(const QMatrix& a) { return 0.5 * (a + adjoint(a)); }

bool is_hermitian(const QMatrix& a, double tolerance) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = r; c < a.size(); ++c)
      if (abs(a(r, c) - conj(a(c, r))) > tolerance) return false;
  return true;
}

QMatrix affine(const QMatrix& t, double a, double b) {
  QMatrix out = a * t;
  for (std::size_t k = 0; k < t.size(); ++k) out(k, k) += Quaternion{b};
  return out;
}

QMatrix direct_sum(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size() + b.size();
  QMatrix out(n);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) out(a.size() + r, a.size() + c) = b(r, c);
  return out;
}

QMatrix principal_submatrix(const QMatrix& t, std::span<const std::size_t> indices) {
  QMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c) {
      if (indices[r] >= t.size() || indices[c] >= t.size()) {
        throw DimensionError("principal_submatrix: index out of range");
      }
      out(r, c) = t(indices[r], indices[c]);
    }
  return out;
}

double frobenius(const QMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) s += norm2(a(r, c));
  return std::sqrt(s);
}

RealMatrix real_rep(const QMatrix& a) {
  const std::size_t n = a.size();
  RealMatrix m(4 * n, 4 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion& q = a(r, c);
      // Left multiplication v -> q v in the basis (1, i, j, k).
      const double block[4][4] = {{q.w, -q.x, -q.y, -q.z},
                                  {q.x, q.w, -q.z, q.y},
                                  {q.y, q.z, q.w, -q.x},
                                  {q.z, -q.y, q.x, q.w}};
      for (int p = 0; p < 4; ++p)
        for (int s = 0; s < 4; ++s) m(4 * r + p, 4 * c + s) = block[p][s];
    }
  return m;
}

ComplexMatrix complex_rep(const QMatrix& a) {
  using C = std::complex<double>;
  const std::size_t n = a.size();
  ComplexMatrix m(2 * n, std::vector<C>(2 * n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion& q = a(r, c);
      const C z1{q.w, q.x};
      const C z2{q.y, q.z};
      m[r][c] = z1;
      m[r][n + c] = z2;
      m[n + r][c] = -std::conj(z2);
      m[n + r][n + c] = std::conj(z1);
    }
  return m;
}

QMatrix delta(const QMatrix& t, const Quaternion& q) {
  QMatrix out = t * t - (2.0 * re(q)) * t;
  const double n2 = norm2(q);
  for (std::size_t k = 0; k < t.size(); ++k) out(k, k) += Quaternion{n2};
  return out;
}

double smallest_singular_value(const QMatrix& a) {
  const RealMatrix r = real_rep(a);
  const std::size_t m = r.rows();
  if (m == 0) throw DimensionError("smallest_singular_value: empty matrix");
  // Eigenvalues of [[0, R], [R^T, 0]] are +-sigma_i; this avoids squaring
  // the condition number as R^T R would.
  RealMatrix aug(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      aug(i, m + j) = r(i, j);
      aug(m + j, i) = r(i, j);
    }
  JacobiOptions opts;
  opts.vectors = false;
  const SymSpectrum s = sym_eig(aug, opts);
  double best = s.eigenvalues.empty() ? 0.0 : std::fabs(s.eigenvalues.front());
  for (double v : s.eigenvalues) best = std::min(best, std::fabs(v));
  return best;
}

}  // namespace qnr
