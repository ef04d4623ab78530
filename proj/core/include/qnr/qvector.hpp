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
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "qnr/quaternion.hpp"

namespace qnr {

/// Column vector in H^n. The space is a right H-module: scalars act from the
/// right, x -> x q.
using QVector = std::vector<Quaternion>;

/// <x, y> = sum_k conj(y_k) x_k. Right-linear in x:
/// <x q, y> = <x, y> q and <x, y q> = conj(q) <x, y>.
Quaternion inner(std::span<const Quaternion> x, std::span<const Quaternion> y);

double norm(std::span<const Quaternion> x);

/// x q (right scalar multiplication).
QVector scale_right(std::span<const Quaternion> x, const Quaternion& q);

QVector add(std::span<const Quaternion> x, std::span<const Quaternion> y);
QVector sub(std::span<const Quaternion> x, std::span<const Quaternion> y);

QVector normalized(std::span<const Quaternion> x);

QVector basis_vector(std::size_t n, std::size_t index);

/// Unit vector drawn uniformly from the sphere of H^n.
template <class Rng>
QVector random_unit_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> gauss;
  QVector x(n);
  for (;;) {
    double s = 0.0;
    for (auto& q : x) {
      q = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
      s += norm2(q);
    }
    if (s > 1e-24) {
      const double inv = 1.0 / std::sqrt(s);
      for (auto& q : x) q *= inv;
      return x;
    }
  }
}

/// Finitely supported vector in H^infinity: sorted (index, value) pairs with
/// distinct indices and no explicit zeros required.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Quaternion>;

  SparseVector() = default;
  explicit SparseVector(std::vector<Entry> entries);

  static SparseVector unit(std::size_t index, const Quaternion& value = Quaternion{1.0});

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  /// One past the largest stored index (0 if empty).
  std::size_t extent() const { return entries_.empty() ? 0 : entries_.back().first + 1; }
  /// Smallest stored index; extent() if empty.
  std::size_t min_index() const { return entries_.empty() ? 0 : entries_.front().first; }

  Quaternion at(std::size_t index) const;

  SparseVector scaled_right(const Quaternion& q) const;
  double norm() const;
  QVector to_dense(std::size_t n) const;

  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);

 private:
  std::vector<Entry> entries_;
};

Quaternion inner(const SparseVector& x, const SparseVector& y);

}  // namespace qnr
