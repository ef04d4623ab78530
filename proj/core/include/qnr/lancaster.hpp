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
#include <optional>
#include <span>
#include <vector>

#include "qnr/geometry.hpp"
#include "qnr/model_operator.hpp"
#include "qnr/numerical_range.hpp"

namespace qnr {

/// Union over satellites s of conv(base ∪ {s}), kept as a list of convex
/// members. With no satellites the only member is the base itself.
struct IconvRegion {
  Polygon base;
  std::vector<Point2> satellites;
  std::vector<Polygon> members;

  bool contains(Point2 p, double slack) const;
  double distance(Point2 p) const;
};

/// Throws DomainError when p is empty.
IconvRegion iconv(const Polygon& p, std::span<const Point2> satellites);

/// Members clipped to b >= 0; members missing the half-plane are dropped.
IconvRegion upper_half(const IconvRegion& region);

/// Hausdorff distance between the region and a convex polygon. The sup over
/// the region is exact (attained at member vertices); the sup over the
/// polygon is taken over its vertices, its boundary at spacing / 4 and an
/// interior grid at the given spacing.
double hausdorff(const IconvRegion& region, const Polygon& q, double spacing);

struct LancasterOptions {
  std::vector<std::size_t> sections{50, 100, 200, 500};
  BildOptions bild;
  double tolerance = 0.02;
  /// Allowed increase between consecutive distances before the trend counts
  /// as non-monotone.
  double monotone_slack = 1e-3;
  /// Boundary spacing of the satellites taken from each inner hull.
  double satellite_spacing = 0.005;
  double sample_spacing = 0.01;
  /// Expected closure of the upper bild; when set, distances to it are
  /// reported and must also meet the tolerance.
  std::optional<Polygon> reference;
  bool keep_regions = false;
};

struct LancasterRow {
  std::size_t section = 0;
  double hausdorff_outer = 0.0;      // upper iconv region vs outer polygon of R_N
  double hausdorff_reference = 0.0;  // iconv region vs reference (0 without one)
  double bild_gap = 0.0;             // hausdorff_gap of R_N itself
  std::size_t satellites = 0;
};

struct LancasterReport {
  Polygon essential;
  Polygon essential_upper;
  std::vector<LancasterRow> rows;
  /// Only filled with keep_regions.
  std::vector<BildRegion> regions;
  std::vector<IconvRegion> iconv_regions;
  bool monotone = false;
  double final_distance = 0.0;
  bool pass = false;
};

/// For each N: R_N = upper_bild(truncate(m, N)) and L_N is the upper half of
/// iconv(essential bild, boundary points of the inner hull of R_N and their
/// mirror images). Both sets are taken in full: the lower half of the
/// essential bild generates upper points together with upper satellites.
/// Pass requires the outer distances to be non-increasing (within
/// monotone_slack) and the last distance (to the reference when given) to be
/// at most tolerance.
LancasterReport lancaster_check(const ModelOperator& m, const LancasterOptions& options = {});

struct ProbeRow {
  std::size_t section = 0;
  double residual = 0.0;
};

/// Largest distance from a point of the edge (endpoints plus 200 interior
/// samples) to the inner hull of R_N, per section.
std::vector<ProbeRow> nonclosedness_probe(const ModelOperator& m, Point2 edge0, Point2 edge1,
                                          std::span<const std::size_t> sections,
                                          const BildOptions& options = {});

/// Same, reusing regions already computed for the given sections.
std::vector<ProbeRow> nonclosedness_probe(std::span<const BildRegion> regions,
                                          std::span<const std::size_t> sections, Point2 edge0,
                                          Point2 edge1);

}  // namespace qnr
