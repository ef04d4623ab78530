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

#include "qnr/qvector.hpp"

#include <algorithm>
#include <string>

#include "qnr/error.hpp"

namespace qnr {

namespace {

void check_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Quaternion inner(std::span<const Quaternion> x, std::span<const Quaternion> y) {
  check_same_size(x.size(), y.size(), "inner");
  Quaternion s;
  for (std::size_t k = 0; k < x.size(); ++k) s += conj(y[k]) * x[k];
  return s;
}

double norm(std::span<const Quaternion> x) {
  double s = 0.0;
  for (const auto& q : x) s += norm2(q);
  return std::sqrt(s);
}

QVector scale_right(std::span<const Quaternion> x, const Quaternion& q) {
  QVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] * q;
  return out;
}

QVector add(std::span<const Quaternion> x, std::span<const Quaternion> y) {
  check_same_size(x.size(), y.size(), "add");
  QVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] + y[k];
  return out;
}

QVector sub(std::span<const Quaternion> x, std::span<const Quaternion> y) {
  check_same_size(x.size(), y.size(), "sub");
  QVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = x[k] - y[k];
  return out;
}

QVector normalized(std::span<const Quaternion> x) {
  const double n = norm(x);
  if (n == 0.0) throw DomainError("normalized: zero vector");
  return scale_right(x, Quaternion{1.0 / n});
}

QVector basis_vector(std::size_t n, std::size_t index) {
  if (index >= n) throw DimensionError("basis_vector: index out of range");
  QVector e(n);
  e[index] = Quaternion{1.0};
  return e;
}

SparseVector::SparseVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t k = 1; k < entries_.size(); ++k) {
    if (entries_[k].first == entries_[k - 1].first) {
      throw DomainError("SparseVector: duplicate index " + std::to_string(entries_[k].first));
    }
  }
}

SparseVector SparseVector::unit(std::size_t index, const Quaternion& value) {
  return SparseVector({{index, value}});
}

Quaternion SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return {};
}

SparseVector SparseVector::scaled_right(const Quaternion& q) const {
  SparseVector out = *this;
  for (auto& [index, value] : out.entries_) value = value * q;
  return out;
}

double SparseVector::norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += norm2(e.second);
  return std::sqrt(s);
}

QVector SparseVector::to_dense(std::size_t n) const {
  if (extent() > n) throw DimensionError("SparseVector::to_dense: support exceeds dimension");
  QVector out(n);
  for (const auto& [index, value] : entries_) out[index] = value;
  return out;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  std::vector<SparseVector::Entry> out;
  out.reserve(a.entries_.size() + b.entries_.size());
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.entries_.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  SparseVector r;
  r.entries_ = std::move(out);
  return r;
}

Quaternion inner(const SparseVector& x, const SparseVector& y) {
  Quaternion s;
  auto ix = x.entries().begin();
  auto iy = y.entries().begin();
  while (ix != x.entries().end() && iy != y.entries().end()) {
    if (ix->first < iy->first) {
      ++ix;
    } else if (iy->first < ix->first) {
      ++iy;
    } else {
      s += conj(iy->second) * ix->second;
      ++ix;
      ++iy;
    }
  }
  return s;
}

}  // namespace qnr
