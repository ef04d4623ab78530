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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qnr/geometry.hpp"
#include "qnr/qmatrix.hpp"
#include "qnr/symeig.hpp"

namespace qnr {

/// Real symmetric 4n x 4n matrices F_c with X^T F_c X equal to coordinate c
/// (1, i, j, k) of <Tx, x>, where X stacks the real coordinates of x.
struct QuadraticForms {
  std::array<RealMatrix, 4> f;

  static QuadraticForms of(const QMatrix& t);
  Quaternion value(std::span<const double> x) const;
};

std::vector<double> to_real(std::span<const Quaternion> x);
QVector from_real(std::span<const double> x);

/// Connected component of the sparsity graph of T; T is the direct sum of
/// its component blocks up to a permutation.
struct Component {
  std::vector<std::size_t> indices;
  QMatrix block;
};

std::vector<Component> components(const QMatrix& t);

/// m values <Tx, x> at unit vectors with normalized Gaussian coordinates.
/// Deterministic for a given seed and independent of the thread count.
std::vector<Quaternion> nr_sample(const QMatrix& t, std::size_t m, std::uint64_t seed);

/// h(theta) = max over unit x of cos(theta) Re<Tx,x> + sin(theta) |Im<Tx,x>|.
double upper_bild_support(const QMatrix& t, double theta);

/// Support value together with a bild point attaining it.
struct SupportPoint {
  double theta = 0.0;
  double value = 0.0;
  Point2 point;
};

SupportPoint upper_bild_support_point(const QMatrix& t, double theta);

/// theta_t = pi t / k for t = 0..k. Grids for k and 2k nest.
std::vector<double> angle_grid(std::size_t k);

/// Exact upper bild of diag(d_1, ..., d_n): the convex hull of the points
/// csim(d_b) and the real cancellation points of every pair.
Polygon diagonal_upper_bild(std::span<const Quaternion> d);

struct BildOptions {
  std::size_t samples = 200000;
  std::size_t angles = 360;
  std::uint64_t seed = 1;
  /// Downward directions used for local refinement of dense components.
  std::size_t refine_directions = 32;
  std::size_t refine_starts = 8;
  std::size_t refine_iterations = 300;
  /// Cap on cross-component vertex pairs used for cancellation points.
  std::size_t max_pairs = 4000000;
};

struct BildRegion {
  std::vector<Point2> inner_points;
  Polygon inner_hull;
  Polygon outer_polygon;
  /// Hausdorff distance between conv(inner_points) and outer_polygon.
  double hausdorff_gap = 0.0;
  /// Largest shortfall of the inner hull against the support values on the
  /// angle grid; the part of the gap that lies in certified directions.
  double support_gap = 0.0;
  std::vector<SupportPoint> supports;
  /// True when every component is 1 x 1, in which case the lower boundary is
  /// exact as well.
  bool exact = false;
};

BildRegion upper_bild(const QMatrix& t, const BildOptions& options = {});

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Attained estimate of W(T) intersected with the real line. Throws
/// NumericalError when no point with |Im| <= 1e-6 is found.
Interval real_section(const QMatrix& t, const BildOptions& options = {});

Interval real_section(const BildRegion& region);

}  // namespace qnr
