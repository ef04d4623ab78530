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

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qnr/error.hpp"
#include "qnr/geometry.hpp"
#include "qnr/model_operator.hpp"
#include "qnr/quaternion.hpp"

namespace qnr {

/// Convex hull of {(a, b), (a, -b)} over the declared limit set; segments are
/// discretized at spacing 1e-4 (endpoints included).
Polygon essential_bild(const ModelOperator& m);

/// Upper half of essential_bild.
Polygon essential_bild_upper(const ModelOperator& m);

/// Unit vectors x_j, weakly null, with <T x_j, x_j> -> omega.
struct EssentialSequence {
  Quaternion limit;
  std::vector<SparseVector> vectors;
  std::vector<Quaternion> values;  // <T x_j, x_j>
  std::vector<double> errors;      // |values[j] - limit|
  std::vector<std::size_t> tail_indices;
};

struct SequenceOptions {
  std::size_t length = 256;
  /// Weight leak / sqrt(j + 1) (capped at 1/2) placed on block coordinate 0;
  /// zero for pure tail basis vectors.
  double leak = 0.0;
  /// Largest tail index searched before giving up.
  std::size_t search_limit = 5000000;
};

/// Essential sequence for omega built from rotated tail basis vectors
/// e_{n_j} u_j with dist(csim(s_{n_j}), csim(omega)) <= 1 / (2 (j + 1)).
/// Throws DomainError when csim(omega) is not a declared limit point and
/// NumericalError when the search limit is exhausted.
EssentialSequence essential_sequence(const ModelOperator& m, const Quaternion& omega,
                                     const SequenceOptions& options = {});

struct SelectResult {
  std::size_t index = 0;
  double inner = 0.0;          // |<x_N, y_M>|
  double operator_inner = 0.0;  // |<T x_N, y_M>|
  double adjoint_inner = 0.0;   // |<T* x_N, y_M>|

  double worst() const { return std::max({inner, operator_inner, adjoint_inner}); }
};

class SelectionExhausted : public NumericalError {
 public:
  SelectionExhausted(const std::string& what, SelectResult best)
      : NumericalError(what), best_(best) {}
  const SelectResult& best() const { return best_; }

 private:
  SelectResult best_;
};

/// Smallest M >= n with |<x_N, y_M>|, |<T x_N, y_M>|, |<T* x_N, y_M>| all
/// <= eps. Op/Vec is either TruncatedOperator/QVector or
/// ModelOperator/SparseVector. Throws SelectionExhausted with the best triple
/// seen when no such M exists in ys.
template <class Op, class Vec>
SelectResult quasi_orth_select(const Op& t, std::span<const Vec> xs, std::span<const Vec> ys,
                               std::size_t n, double eps) {
  if (!(eps > 0.0)) throw DomainError("quasi_orth_select: eps must be positive");
  if (n >= xs.size()) throw DomainError("quasi_orth_select: index outside the x list");
  const Vec& x = xs[n];
  const Vec tx = qnr::apply(t, x);
  const Vec tsx = qnr::apply_adjoint(t, x);
  SelectResult best;
  bool have_best = false;
  for (std::size_t m = n; m < ys.size(); ++m) {
    SelectResult r{m, abs(inner(x, ys[m])), abs(inner(tx, ys[m])), abs(inner(tsx, ys[m]))};
    if (r.worst() <= eps) return r;
    if (!have_best || r.worst() < best.worst()) {
      best = r;
      have_best = true;
    }
  }
  throw SelectionExhausted("quasi_orth_select: no index M >= " + std::to_string(n) +
                               " meets eps = " + format_double(eps) + "; best triple (" +
                               format_double(best.inner) + ", " + format_double(best.operator_inner) +
                               ", " + format_double(best.adjoint_inner) + ") at M = " +
                               std::to_string(best.index),
                           best);
}

/// z_p = normalize(alpha x_{N_p} + beta y_{M_p}) with alpha^2 + beta^2 = 1.
struct CombinationSequence {
  Quaternion predicted;  // alpha^2 omega_1 + beta^2 omega_2
  std::vector<SparseVector> vectors;
  std::vector<Quaternion> values;
  std::vector<double> errors;  // |values[p-1] - predicted|
  std::vector<std::size_t> n_index;
  std::vector<SelectResult> selections;
  /// max over p of p * errors[p-1]
  double error_constant = 0.0;

  EssentialSequence as_essential() const;
};

/// Combines two essential sequences of the same operator: for p = 1..depth,
/// N_p is the first index >= p - 1 after which the x errors stay <= 1/p, and
/// M_p comes from quasi_orth_select with eps = 1/p over the y indices whose
/// errors also stay <= 1/p. error_scale relaxes both error thresholds to
/// error_scale / p, for inputs that are themselves combinations.
CombinationSequence combine_sequences(const ModelOperator& m, const EssentialSequence& xs,
                                      const EssentialSequence& ys, double alpha, std::size_t depth,
                                      double error_scale = 1.0);

/// Builds essential sequences for omega1, omega2 and combines them.
/// alpha = 1 returns the omega1 sequence itself.
CombinationSequence convex_combination_sequence(const ModelOperator& m, const Quaternion& omega1,
                                                const Quaternion& omega2, double alpha,
                                                std::size_t depth,
                                                const SequenceOptions& options = {});

struct MembershipReport {
  bool member = false;
  double distance = 0.0;  // bild distance to the essential polygon
  bool constructed = false;
  Quaternion achieved;
  double constructive_error = 0.0;
};

/// csim(q) inside essential_bild within eps. For members and depth > 0 a
/// constructive sequence is also built from at most three limit generators.
MembershipReport we_membership_report(const ModelOperator& m, const Quaternion& q, double eps,
                                      std::size_t depth);

bool we_membership(const ModelOperator& m, const Quaternion& q, double eps, std::size_t depth = 0);

}  // namespace qnr
