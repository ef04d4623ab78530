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

#include <span>
#include <vector>

namespace qnr {

/// Point in bild coordinates (a, b) = (Re q, |Im q|), or a general plane point.
struct Point2 {
  double a = 0.0;
  double b = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 p, Point2 q) { return {p.a + q.a, p.b + q.b}; }
inline Point2 operator-(Point2 p, Point2 q) { return {p.a - q.a, p.b - q.b}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.a, s * p.b}; }

double dot(Point2 p, Point2 q);
double cross(Point2 o, Point2 p, Point2 q);
double dist(Point2 p, Point2 q);

/// Convex polygon, counter-clockwise, without repeated or collinear vertices.
/// One or two vertices encode a point or a segment.
using Polygon = std::vector<Point2>;

/// Andrew's monotone chain. Collinear boundary points are dropped.
Polygon convex_hull(std::span<const Point2> points);

/// Half-plane {p : n.p <= c}.
struct HalfPlane {
  Point2 normal;
  double offset = 0.0;
};

/// Clips a convex polygon to a half-plane; may return an empty polygon.
Polygon clip(const Polygon& poly, const HalfPlane& h);

/// Intersection of half-planes starting from an axis-aligned box.
Polygon intersect_halfplanes(std::span<const HalfPlane> planes, Point2 box_lo, Point2 box_hi);

double distance_to_segment(Point2 p, Point2 s0, Point2 s1);

/// Euclidean distance from p to a convex polygon (zero inside).
double distance_to_convex(const Polygon& poly, Point2 p);

/// True when p lies within `slack` of the polygon.
bool contains(const Polygon& poly, Point2 p, double slack);

/// Hausdorff distance between two convex polygons. The distance to a convex
/// set is a convex function, so both directed distances peak at vertices.
double hausdorff(const Polygon& p, const Polygon& q);

/// max over p of n.p
double support(const Polygon& poly, Point2 direction);

double area(const Polygon& poly);

/// Points along the boundary with spacing at most h, vertices included.
std::vector<Point2> densify_boundary(const Polygon& poly, double h);

/// The polygon reflected through the a-axis, merged with itself.
Polygon symmetrize(const Polygon& poly);

/// Restriction to the closed upper half-plane b >= 0.
Polygon upper_half(const Polygon& poly);

}  // namespace qnr
