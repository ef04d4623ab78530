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
#include <string>
#include <vector>

#include "qnr/qmatrix.hpp"
#include "qnr/quaternion.hpp"
#include "qnr/qvector.hpp"

namespace qnr {

/// Generator n -> s_n (n >= 1) of the diagonal tail.
struct TailSymbol {
  enum class Kind {
    constant,     // s_n = values[0]
    periodic,     // s_n = values[(n - 1) mod size]
    rationals_i,  // s_n = r_n i, r_n enumerating rationals with |r| < radius
    explicit_values,  // s_n = values[n - 1] for n <= size, fill afterwards
    harmonic,     // s_n = values[0] / n
  };

  Kind kind = Kind::constant;
  std::vector<Quaternion> values{Quaternion{}};
  Quaternion fill;
  double radius = 0.5;

  static TailSymbol constant(const Quaternion& q);
  static TailSymbol periodic(std::vector<Quaternion> cycle);
  static TailSymbol rationals(double radius = 0.5);
  static TailSymbol explicit_list(std::vector<Quaternion> list, const Quaternion& fill);
  static TailSymbol harmonic(const Quaternion& q);
};

std::string to_string(TailSymbol::Kind kind);

/// The rationals p/q with |p/q| < radius in order of increasing denominator,
/// numerators ascending within a denominator, lowest terms only. Entry
/// n - 1 is the n-th term. Cached per radius.
double farey_term(double radius, std::size_t n);

/// Declared limit point set member: the sphere (a, b0) when b0 == b1, else
/// the segment of spheres {(a, b) : b in [b0, b1]}.
struct LimitEntry {
  double a = 0.0;
  double b0 = 0.0;
  double b1 = 0.0;

  static LimitEntry sphere(double a, double b) { return {a, b, b}; }
  static LimitEntry segment(double a, double b0, double b1) { return {a, b0, b1}; }
  bool is_sphere() const { return b0 == b1; }
  /// Distance in bild coordinates from s to this entry.
  double distance(const SimilaritySphere& s) const;

  friend bool operator==(const LimitEntry&, const LimitEntry&) = default;
};

/// Finite quaternionic block direct-summed with a bounded diagonal tail.
/// Global index r < block_size() addresses the block, r = block_size() + n - 1
/// addresses tail entry s_n.
class ModelOperator {
 public:
  ModelOperator(QMatrix block, TailSymbol tail, std::vector<LimitEntry> limit_set, double bound);

  const QMatrix& block() const { return block_; }
  const TailSymbol& tail() const { return tail_; }
  const std::vector<LimitEntry>& limit_set() const { return limit_set_; }
  double bound() const { return bound_; }
  std::size_t block_size() const { return block_.size(); }

  /// s_n for n >= 1, after the affine and conjugation transforms.
  Quaternion symbol(std::size_t n) const;

  /// max(|block|_F, bound); an upper bound on the operator norm.
  double norm_bound() const;

  /// T* (conjugated block adjoint and tail).
  ModelOperator adjoint() const;
  /// a T + b I for real a, b.
  ModelOperator affine(double a, double b) const;
  /// Same tail and limit set with another block.
  ModelOperator with_block(QMatrix block) const;

  /// Checks |s_n| <= bound for n <= n_check and that every declared limit
  /// point (segments at spacing 1e-3) is within 1e-3 of some csim(s_n).
  /// Throws DomainError naming the first violation.
  void validate(std::size_t n_check) const;

  SparseVector apply(const SparseVector& x) const;
  SparseVector apply_adjoint(const SparseVector& x) const;

 private:
  QMatrix block_;
  TailSymbol tail_;
  std::vector<LimitEntry> limit_set_;
  double bound_ = 0.0;
  // s -> scale * (conj(s) if conjugate) + shift
  double scale_ = 1.0;
  double shift_ = 0.0;
  bool conjugate_ = false;
};

/// Finite section diag(block, s_1, ..., s_N).
struct TruncatedOperator {
  QMatrix matrix;
  std::size_t block_size = 0;
  std::size_t section = 0;
};

TruncatedOperator truncate(const ModelOperator& m, std::size_t n);

QVector apply(const TruncatedOperator& t, std::span<const Quaternion> x);
QVector apply_adjoint(const TruncatedOperator& t, std::span<const Quaternion> x);
SparseVector apply(const ModelOperator& t, const SparseVector& x);
SparseVector apply_adjoint(const ModelOperator& t, const SparseVector& x);

}  // namespace qnr
