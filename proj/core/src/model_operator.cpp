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

#include "qnr/model_operator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "qnr/error.hpp"

namespace qnr {

TailSymbol TailSymbol::constant(const Quaternion& q) { return {Kind::constant, {q}, {}, 0.5}; }

TailSymbol TailSymbol::periodic(std::vector<Quaternion> cycle) {
  if (cycle.empty()) throw DomainError("periodic tail needs at least one value");
  return {Kind::periodic, std::move(cycle), {}, 0.5};
}

TailSymbol TailSymbol::rationals(double radius) {
  if (!(radius > 0.0)) throw DomainError("rationals_i tail needs a positive radius");
  return {Kind::rationals_i, {}, {}, radius};
}

TailSymbol TailSymbol::explicit_list(std::vector<Quaternion> list, const Quaternion& fill) {
  return {Kind::explicit_values, std::move(list), fill, 0.5};
}

TailSymbol TailSymbol::harmonic(const Quaternion& q) { return {Kind::harmonic, {q}, {}, 0.5}; }

std::string to_string(TailSymbol::Kind kind) {
  switch (kind) {
    case TailSymbol::Kind::constant: return "constant";
    case TailSymbol::Kind::periodic: return "periodic";
    case TailSymbol::Kind::rationals_i: return "rationals_i";
    case TailSymbol::Kind::explicit_values: return "explicit";
    case TailSymbol::Kind::harmonic: return "harmonic";
  }
  return "unknown";
}

namespace {

struct FareyCache {
  std::vector<double> terms;
  long long next_denominator = 1;
};

std::mutex farey_mutex;
std::map<double, FareyCache> farey_caches;

}  // namespace

double farey_term(double radius, std::size_t n) {
  if (n == 0) throw DomainError("farey_term: terms are numbered from 1");
  std::lock_guard lock(farey_mutex);
  FareyCache& cache = farey_caches[radius];
  while (cache.terms.size() < n) {
    const long long q = cache.next_denominator++;
    const auto bound = static_cast<long long>(std::ceil(radius * static_cast<double>(q)));
    for (long long p = -bound; p <= bound; ++p) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      const double r = static_cast<double>(p) / static_cast<double>(q);
      if (std::fabs(r) < radius) cache.terms.push_back(r);
    }
  }
  return cache.terms[n - 1];
}

double LimitEntry::distance(const SimilaritySphere& s) const {
  const double b = std::clamp(s.b, std::min(b0, b1), std::max(b0, b1));
  return std::hypot(s.a - a, s.b - b);
}

ModelOperator::ModelOperator(QMatrix block, TailSymbol tail, std::vector<LimitEntry> limit_set,
                             double bound)
    : block_(std::move(block)), tail_(std::move(tail)), limit_set_(std::move(limit_set)), bound_(bound) {
  if (limit_set_.empty()) {
    throw DomainError("model operator: the essential numerical range is never empty, so the "
                      "declared limit set must not be");
  }
  if (!(bound_ >= 0.0)) throw DomainError("model operator: bound must be nonnegative");
  for (const auto& e : limit_set_) {
    if (e.b0 < 0.0 || e.b1 < 0.0) {
      throw DomainError("model operator: limit points need b >= 0");
    }
  }
  if ((tail_.kind == TailSymbol::Kind::periodic || tail_.kind == TailSymbol::Kind::constant ||
       tail_.kind == TailSymbol::Kind::harmonic) &&
      tail_.values.empty()) {
    throw DomainError("model operator: tail has no values");
  }
}

Quaternion ModelOperator::symbol(std::size_t n) const {
  if (n == 0) throw DomainError("symbol: tail entries are numbered from 1");
  Quaternion s;
  switch (tail_.kind) {
    case TailSymbol::Kind::constant:
      s = tail_.values[0];
      break;
    case TailSymbol::Kind::periodic:
      s = tail_.values[(n - 1) % tail_.values.size()];
      break;
    case TailSymbol::Kind::rationals_i:
      s = Quaternion{0.0, farey_term(tail_.radius, n), 0.0, 0.0};
      break;
    case TailSymbol::Kind::explicit_values:
      s = n <= tail_.values.size() ? tail_.values[n - 1] : tail_.fill;
      break;
    case TailSymbol::Kind::harmonic:
      s = tail_.values[0] / static_cast<double>(n);
      break;
  }
  if (conjugate_) s = conj(s);
  return s * scale_ + Quaternion{shift_};
}

double ModelOperator::norm_bound() const { return std::max(frobenius(block_), bound_); }

ModelOperator ModelOperator::adjoint() const {
  ModelOperator out = *this;
  out.block_ = qnr::adjoint(block_);
  out.conjugate_ = !conjugate_;
  return out;
}

ModelOperator ModelOperator::affine(double a, double b) const {
  ModelOperator out = *this;
  out.block_ = qnr::affine(block_, a, b);
  out.scale_ = a * scale_;
  out.shift_ = a * shift_ + b;
  out.bound_ = std::fabs(a) * bound_ + std::fabs(b);
  for (auto& e : out.limit_set_) {
    e.a = a * e.a + b;
    e.b0 *= std::fabs(a);
    e.b1 *= std::fabs(a);
  }
  return out;
}

ModelOperator ModelOperator::with_block(QMatrix block) const {
  ModelOperator out = *this;
  out.block_ = std::move(block);
  return out;
}

void ModelOperator::validate(std::size_t n_check) const {
  std::vector<SimilaritySphere> seen;
  seen.reserve(n_check);
  for (std::size_t n = 1; n <= n_check; ++n) {
    const Quaternion s = symbol(n);
    if (abs(s) > bound_ * (1.0 + 1e-12) + 1e-15) {
      throw DomainError("model operator: |s_" + std::to_string(n) + "| = " + format_double(abs(s)) +
                        " exceeds the declared bound " + format_double(bound_));
    }
    seen.push_back(csim(s));
  }
  std::sort(seen.begin(), seen.end(), [](const auto& p, const auto& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  constexpr double kTol = 1e-3;
  auto near = [&](const SimilaritySphere& target) {
    // seen is sorted by a; scan the window |a - target.a| <= kTol.
    auto it = std::lower_bound(seen.begin(), seen.end(), target.a - kTol,
                               [](const SimilaritySphere& p, double v) { return p.a < v; });
    for (; it != seen.end() && it->a <= target.a + kTol; ++it) {
      if (distance(*it, target) <= kTol) return true;
    }
    return false;
  };
  for (const auto& e : limit_set_) {
    const double lo = std::min(e.b0, e.b1);
    const double hi = std::max(e.b0, e.b1);
    const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / kTol));
    for (std::size_t s = 0; s <= steps; ++s) {
      const double b = steps == 0 ? lo : lo + (hi - lo) * static_cast<double>(s) / static_cast<double>(steps);
      if (!near({e.a, b})) {
        throw DomainError("model operator: declared limit point (" + format_double(e.a) + ", " +
                          format_double(b) + ") is not within 1e-3 of any s_n, n <= " +
                          std::to_string(n_check));
      }
    }
  }
}

namespace {

SparseVector apply_impl(const ModelOperator& m, const SparseVector& x, bool adjoint_op) {
  const std::size_t nb = m.block_size();
  const QMatrix& blk = m.block();
  std::vector<SparseVector::Entry> out;
  // Block part: dense on the block coordinates.
  bool touches_block = false;
  for (const auto& [r, q] : x.entries()) {
    if (r < nb) touches_block = true;
  }
  if (touches_block) {
    for (std::size_t r = 0; r < nb; ++r) {
      Quaternion s;
      for (const auto& [c, q] : x.entries()) {
        if (c >= nb) break;
        s += (adjoint_op ? conj(blk(c, r)) : blk(r, c)) * q;
      }
      if (s != Quaternion{}) out.emplace_back(r, s);
    }
  }
  for (const auto& [r, q] : x.entries()) {
    if (r < nb) continue;
    Quaternion s = m.symbol(r - nb + 1);
    if (adjoint_op) s = conj(s);
    out.emplace_back(r, s * q);
  }
  return SparseVector(std::move(out));
}

}  // namespace

SparseVector ModelOperator::apply(const SparseVector& x) const { return apply_impl(*this, x, false); }

SparseVector ModelOperator::apply_adjoint(const SparseVector& x) const {
  return apply_impl(*this, x, true);
}

TruncatedOperator truncate(const ModelOperator& m, std::size_t n) {
  if (n < 1) throw DomainError("truncate: section size must be at least 1");
  const std::size_t nb = m.block_size();
  TruncatedOperator t{QMatrix(nb + n), nb, n};
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nb; ++c) t.matrix(r, c) = m.block()(r, c);
  for (std::size_t k = 1; k <= n; ++k) t.matrix(nb + k - 1, nb + k - 1) = m.symbol(k);
  return t;
}

QVector apply(const TruncatedOperator& t, std::span<const Quaternion> x) { return qnr::apply(t.matrix, x); }

QVector apply_adjoint(const TruncatedOperator& t, std::span<const Quaternion> x) {
  return qnr::apply(qnr::adjoint(t.matrix), x);
}

SparseVector apply(const ModelOperator& t, const SparseVector& x) { return t.apply(x); }

SparseVector apply_adjoint(const ModelOperator& t, const SparseVector& x) {
  return t.apply_adjoint(x);
}

}  // namespace qnr
