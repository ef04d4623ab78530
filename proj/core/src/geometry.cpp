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

#include "qnr/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qnr/error.hpp"

namespace qnr {

double dot(Point2 p, Point2 q) { return p.a * q.a + p.b * q.b; }

double cross(Point2 o, Point2 p, Point2 q) {
  return (p.a - o.a) * (q.b - o.b) - (p.b - o.b) * (q.a - o.a);
}

double dist(Point2 p, Point2 q) { return std::hypot(p.a - q.a, p.b - q.b); }

Polygon convex_hull(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2 p, Point2 q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;

  double scale = 0.0;
  for (const auto& p : pts) scale = std::max({scale, std::fabs(p.a), std::fabs(p.b)});
  // Turns smaller than this are treated as collinear.
  const double eps = 1e-14 * std::max(1.0, scale * scale);

  // Nearly collinear clouds: the chain below would pop extreme points that
  // sort into the middle by a, so keep the two ends along the spread.
  {
    auto farthest = [&](Point2 from) {
      Point2 best = from;
      double d = -1.0;
      for (const auto& p : pts) {
        const double e = dot(p - from, p - from);
        if (e > d) {
          d = e;
          best = p;
        }
      }
      return best;
    };
    const Point2 e0 = farthest(pts.front());
    const Point2 e1 = farthest(e0);
    const Point2 dir = e1 - e0;
    const double len = std::sqrt(dot(dir, dir));
    double width = 0.0;
    for (const auto& p : pts) width = std::max(width, std::fabs(cross(e0, e1, p)) / len);
    if (width <= 1e-12 * std::max(1.0, scale)) {
      auto lo = pts.front();
      auto hi = pts.front();
      for (const auto& p : pts) {
        if (dot(p - e0, dir) < dot(lo - e0, dir)) lo = p;
        if (dot(p - e0, dir) > dot(hi - e0, dir)) hi = p;
      }
      if (std::make_pair(hi.a, hi.b) < std::make_pair(lo.a, lo.b)) std::swap(lo, hi);
      return {lo, hi};
    }
  }

  Polygon hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= eps) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

Polygon clip(const Polygon& poly, const HalfPlane& h) {
  auto value = [&](Point2 p) { return dot(h.normal, p) - h.offset; };
  if (poly.size() == 1) return value(poly[0]) <= 0.0 ? poly : Polygon{};
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = poly[i];
    const Point2 q = poly[(i + 1) % n];
    const double vp = value(p);
    const double vq = value(q);
    if (vp <= 0.0) out.push_back(p);
    if ((vp < 0.0 && vq > 0.0) || (vp > 0.0 && vq < 0.0)) {
      const double t = vp / (vp - vq);
      out.push_back(p + t * (q - p));
    }
    if (n == 2) break;  // a segment has a single edge
  }
  if (n == 2 && value(poly[1]) <= 0.0) out.push_back(poly[1]);
  return convex_hull(out);
}

Polygon intersect_halfplanes(std::span<const HalfPlane> planes, Point2 box_lo, Point2 box_hi) {
  Polygon poly{box_lo, {box_hi.a, box_lo.b}, box_hi, {box_lo.a, box_hi.b}};
  poly = convex_hull(poly);
  for (const auto& h : planes) {
    poly = clip(poly, h);
    if (poly.empty()) break;
  }
  return poly;
}

double distance_to_segment(Point2 p, Point2 s0, Point2 s1) {
  const Point2 d = s1 - s0;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return dist(p, s0);
  const double t = std::clamp(dot(p - s0, d) / len2, 0.0, 1.0);
  return dist(p, s0 + t * d);
}

namespace {

bool inside_strict(const Polygon& poly, Point2 p) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(poly[i], poly[(i + 1) % n], p) < 0.0) return false;
  }
  return true;
}

}  // namespace

double distance_to_convex(const Polygon& poly, Point2 p) {
  if (poly.empty()) throw DomainError("distance_to_convex: empty polygon");
  if (poly.size() == 1) return dist(p, poly[0]);
  if (inside_strict(poly, p)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, distance_to_segment(p, poly[i], poly[(i + 1) % n]));
  }
  return best;
}

bool contains(const Polygon& poly, Point2 p, double slack) {
  return distance_to_convex(poly, p) <= slack;
}

double hausdorff(const Polygon& p, const Polygon& q) {
  if (p.empty() || q.empty()) throw DomainError("hausdorff: empty polygon");
  double h = 0.0;
  for (const auto& v : p) h = std::max(h, distance_to_convex(q, v));
  for (const auto& v : q) h = std::max(h, distance_to_convex(p, v));
  return h;
}

double support(const Polygon& poly, Point2 direction) {
  if (poly.empty()) throw DomainError("support: empty polygon");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : poly) best = std::max(best, dot(direction, v));
  return best;
}

double area(const Polygon& poly) {
  double s = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = poly[i];
    const Point2 q = poly[(i + 1) % n];
    s += p.a * q.b - p.b * q.a;
  }
  return 0.5 * s;
}

std::vector<Point2> densify_boundary(const Polygon& poly, double h) {
  if (!(h > 0.0)) throw DomainError("densify_boundary: spacing must be positive");
  std::vector<Point2> out;
  const std::size_t n = poly.size();
  if (n <= 1) return poly;
  const std::size_t edges = n == 2 ? 1 : n;
  for (std::size_t i = 0; i < edges; ++i) {
    const Point2 p = poly[i];
    const Point2 q = poly[(i + 1) % n];
    const auto steps = static_cast<std::size_t>(std::ceil(dist(p, q) / h));
    for (std::size_t s = 0; s < std::max<std::size_t>(steps, 1); ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(std::max<std::size_t>(steps, 1));
      out.push_back(p + t * (q - p));
    }
  }
  if (n == 2) out.push_back(poly[1]);
  return out;
}

Polygon symmetrize(const Polygon& poly) {
  std::vector<Point2> pts(poly.begin(), poly.end());
  for (const auto& p : poly) pts.push_back({p.a, -p.b});
  return convex_hull(pts);
}

Polygon upper_half(const Polygon& poly) { return clip(poly, {{0.0, -1.0}, 0.0}); }

}  // namespace qnr
