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

#include "qnr/essential.hpp"

#include <cmath>
#include <limits>

namespace qnr {

Polygon essential_bild(const ModelOperator& m) {
  std::vector<Point2> pts;
  for (const auto& e : m.limit_set()) {
    const double lo = std::min(e.b0, e.b1);
    const double hi = std::max(e.b0, e.b1);
    const auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / 1e-4));
    for (std::size_t s = 0; s <= steps; ++s) {
      const double b = s == steps ? hi : lo + 1e-4 * static_cast<double>(s);
      pts.push_back({e.a, b});
      pts.push_back({e.a, -b});
    }
  }
  return convex_hull(pts);
}

Polygon essential_bild_upper(const ModelOperator& m) { return upper_half(essential_bild(m)); }

namespace {

// u with conj(u) s u having its imaginary part along that of target.
Quaternion aligning_unit(const Quaternion& s, const Quaternion& target) {
  const double bs = abs_im(s);
  const double bt = abs_im(target);
  if (bs < 1e-300 || bt < 1e-300) return Quaternion{1.0};
  return conj(rotation_between(im(s) / bs, im(target) / bt));
}

double suffix_first(const std::vector<double>& errors, std::size_t start, double bound) {
  // First index j >= start after which every error stays <= bound; returns
  // errors.size() when none.
  std::size_t first = errors.size();
  for (std::size_t j = errors.size(); j-- > start;) {
    if (errors[j] > bound) break;
    first = j;
  }
  return static_cast<double>(first);
}

}  // namespace

EssentialSequence essential_sequence(const ModelOperator& m, const Quaternion& omega,
                                     const SequenceOptions& options) {
  const SimilaritySphere target = csim(omega);
  bool declared = false;
  for (const auto& e : m.limit_set()) declared = declared || e.distance(target) <= 1e-9;
  if (!declared) {
    throw DomainError("essential_sequence: (" + format_double(target.a) + ", " +
                      format_double(target.b) + ") is not a declared limit point");
  }
  const std::size_t nb = m.block_size();
  EssentialSequence seq;
  seq.limit = omega;
  std::size_t n = 0;
  for (std::size_t j = 0; j < options.length; ++j) {
    const double tol = 1.0 / (2.0 * static_cast<double>(j + 1));
    Quaternion s;
    for (;;) {
      if (++n > options.search_limit) {
        throw NumericalError("essential_sequence: no tail entry within " + format_double(tol) +
                             " of the target below index " + std::to_string(options.search_limit));
      }
      s = m.symbol(n);
      if (distance(csim(s), target) <= tol) break;
    }
    const Quaternion u = aligning_unit(s, omega);
    std::vector<SparseVector::Entry> entries;
    double delta = 0.0;
    if (options.leak > 0.0 && nb > 0) {
      delta = std::min(0.5, options.leak / std::sqrt(static_cast<double>(j + 1)));
      entries.emplace_back(0, Quaternion{delta});
    }
    entries.emplace_back(nb + n - 1, u * std::sqrt(1.0 - delta * delta));
    SparseVector x(std::move(entries));
    const Quaternion value = inner(m.apply(x), x);
    seq.values.push_back(value);
    seq.errors.push_back(abs(value - omega));
    seq.vectors.push_back(std::move(x));
    seq.tail_indices.push_back(n);
  }
  return seq;
}

EssentialSequence CombinationSequence::as_essential() const {
  EssentialSequence seq;
  seq.limit = predicted;
  seq.vectors = vectors;
  seq.values = values;
  seq.errors = errors;
  for (const auto& v : vectors) seq.tail_indices.push_back(v.extent());
  return seq;
}

CombinationSequence combine_sequences(const ModelOperator& m, const EssentialSequence& xs,
                                      const EssentialSequence& ys, double alpha, std::size_t depth,
                                      double error_scale) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("combine_sequences: alpha must lie in [0, 1]");
  if (depth < 1) throw DomainError("combine_sequences: depth must be positive");
  const double beta = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
  CombinationSequence out;
  out.predicted = xs.limit * (alpha * alpha) + ys.limit * (beta * beta);
  for (std::size_t p = 1; p <= depth; ++p) {
    const double eps = 1.0 / static_cast<double>(p);
    const auto np = static_cast<std::size_t>(suffix_first(xs.errors, p - 1, error_scale * eps));
    if (np >= xs.vectors.size()) {
      throw NumericalError("combine_sequences: first sequence too short for p = " + std::to_string(p));
    }
    SparseVector z;
    SelectResult sel{np, 0.0, 0.0, 0.0};
    if (beta == 0.0) {
      z = xs.vectors[np];
    } else {
      const auto ystart = static_cast<std::size_t>(suffix_first(ys.errors, np, error_scale * eps));
      if (ystart >= ys.vectors.size()) {
        throw NumericalError("combine_sequences: second sequence too short for p = " + std::to_string(p));
      }
      // Search the y list from ystart, reported in its own indexing.
      std::vector<SparseVector> tail(ys.vectors.begin() + static_cast<std::ptrdiff_t>(ystart),
                                     ys.vectors.end());
      std::vector<SparseVector> xone{xs.vectors[np]};
      sel = quasi_orth_select<ModelOperator, SparseVector>(m, xone, tail, 0, eps);
      sel.index += ystart;
      z = xs.vectors[np].scaled_right(Quaternion{alpha}) + ys.vectors[sel.index].scaled_right(Quaternion{beta});
      const double nz = z.norm();
      z = z.scaled_right(Quaternion{1.0 / nz});
    }
    const Quaternion value = inner(m.apply(z), z);
    const double err = abs(value - out.predicted);
    out.vectors.push_back(std::move(z));
    out.values.push_back(value);
    out.errors.push_back(err);
    out.n_index.push_back(np);
    out.selections.push_back(sel);
    out.error_constant = std::max(out.error_constant, static_cast<double>(p) * err);
  }
  return out;
}

namespace {

std::size_t sequence_length(const ModelOperator& m, std::size_t depth, const SequenceOptions& options,
                            const Quaternion& omega) {
  // Leaked vectors carry an error of about leak^2 |T00 - omega| / (j + 1), so
  // reaching 1/p needs proportionally more terms.
  double factor = 4.0;
  if (options.leak > 0.0 && m.block_size() > 0) {
    factor += 4.0 * options.leak * options.leak * (1.0 + abs(m.block()(0, 0)) + abs(omega));
  }
  return std::max(options.length, static_cast<std::size_t>(factor * static_cast<double>(depth)) + 16);
}

}  // namespace

CombinationSequence convex_combination_sequence(const ModelOperator& m, const Quaternion& omega1,
                                                const Quaternion& omega2, double alpha,
                                                std::size_t depth, const SequenceOptions& options) {
  SequenceOptions o1 = options;
  o1.length = sequence_length(m, depth, options, omega1);
  SequenceOptions o2 = options;
  o2.length = sequence_length(m, depth, options, omega2);
  const EssentialSequence xs = essential_sequence(m, omega1, o1);
  const EssentialSequence ys = essential_sequence(m, omega2, o2);
  return combine_sequences(m, xs, ys, alpha, depth);
}

MembershipReport we_membership_report(const ModelOperator& m, const Quaternion& q, double eps,
                                      std::size_t depth) {
  if (!(eps > 0.0)) throw DomainError("we_membership: eps must be positive");
  MembershipReport report;
  const SimilaritySphere s = csim(q);
  const Polygon poly = essential_bild(m);
  const Point2 target{s.a, s.b};
  report.distance = distance_to_convex(poly, target);
  report.member = report.distance <= eps;
  if (!report.member || depth == 0) return report;

  // Barycentric weights of the nearest polygon point over a fan triangle.
  Point2 z = target;
  if (report.distance > 0.0) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.size();
    for (std::size_t e = 0; e < n; ++e) {
      const Point2 p = poly[e];
      const Point2 r = poly[(e + 1) % n];
      const Point2 d = r - p;
      const double len2 = dot(d, d);
      const double t = len2 > 0.0 ? std::clamp(dot(target - p, d) / len2, 0.0, 1.0) : 0.0;
      const Point2 c = p + t * d;
      if (dist(c, target) < best) {
        best = dist(c, target);
        z = c;
      }
    }
  }
  std::vector<std::pair<Point2, double>> gens;
  if (poly.size() == 1) {
    gens = {{poly[0], 1.0}};
  } else if (poly.size() == 2) {
    const Point2 d = poly[1] - poly[0];
    const double t = std::clamp(dot(z - poly[0], d) / dot(d, d), 0.0, 1.0);
    gens = {{poly[0], 1.0 - t}, {poly[1], t}};
  } else {
    for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
      const Point2 a = poly[0], b = poly[k], c = poly[k + 1];
      const double area2 = cross(a, b, c);
      const double l1 = cross(z, b, c) / area2;
      const double l2 = cross(a, z, c) / area2;
      const double l3 = 1.0 - l1 - l2;
      if (l1 >= -1e-12 && l2 >= -1e-12 && l3 >= -1e-12) {
        gens = {{a, std::max(0.0, l1)}, {b, std::max(0.0, l2)}, {c, std::max(0.0, l3)}};
        break;
      }
    }
    if (gens.empty()) return report;
  }
  // Chain: combine generators pairwise, accumulating weight.
  const std::size_t stage_length = 4 * depth + 16;
  auto seq_for = [&](Point2 g) {
    SequenceOptions o;
    o.length = stage_length;
    return essential_sequence(m, Quaternion{g.a, g.b, 0.0, 0.0}, o);
  };
  EssentialSequence acc = seq_for(gens[0].first);
  double acc_weight = gens[0].second;
  for (std::size_t g = 1; g < gens.size(); ++g) {
    const double w = gens[g].second;
    if (w <= 0.0) continue;
    const double total = acc_weight + w;
    const double alpha = std::sqrt(acc_weight / total);
    const EssentialSequence next = seq_for(gens[g].first);
    const std::size_t stage_depth = g + 1 == gens.size() ? depth : stage_length;
    // Intermediate combinations converge like C/p rather than 1/p.
    double scale = 1.0;
    for (std::size_t j = 0; j < acc.errors.size(); ++j) {
      scale = std::max(scale, static_cast<double>(j + 1) * acc.errors[j]);
    }
    acc = combine_sequences(m, acc, next, alpha, std::min(stage_depth, acc.vectors.size()), scale)
              .as_essential();
    acc_weight = total;
  }
  report.constructed = true;
  report.achieved = acc.values.back();
  const Quaternion goal{z.a, z.b, 0.0, 0.0};
  report.constructive_error = abs(report.achieved - goal);
  return report;
}

bool we_membership(const ModelOperator& m, const Quaternion& q, double eps, std::size_t depth) {
  return we_membership_report(m, q, eps, depth).member;
}

}  // namespace qnr
