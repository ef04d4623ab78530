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

#include "qnr/lancaster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qnr/error.hpp"
#include "qnr/essential.hpp"

namespace qnr {

namespace {

struct Box {
  double lo_a, hi_a, lo_b, hi_b;

  double distance(Point2 p) const {
    const double da = std::max({lo_a - p.a, 0.0, p.a - hi_a});
    const double db = std::max({lo_b - p.b, 0.0, p.b - hi_b});
    return std::hypot(da, db);
  }
};

Box box_of(const Polygon& poly) {
  Box b{poly[0].a, poly[0].a, poly[0].b, poly[0].b};
  for (const auto& v : poly) {
    b.lo_a = std::min(b.lo_a, v.a);
    b.hi_a = std::max(b.hi_a, v.a);
    b.lo_b = std::min(b.lo_b, v.b);
    b.hi_b = std::max(b.hi_b, v.b);
  }
  return b;
}

// Distance to a union of convex members. Probes usually come in spatial
// order, so the scan starts at the member that was closest last time and
// skips members whose box is already too far.
class UnionDistance {
 public:
  explicit UnionDistance(const std::vector<Polygon>& members) : members_(members) {
    boxes_.reserve(members.size());
    for (const auto& m : members) boxes_.push_back(box_of(m));
  }

  // Stops early once some member is within cutoff; the result is then only
  // known to be <= cutoff.
  double operator()(Point2 p, double cutoff = 0.0) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = members_.size();
    const std::size_t start = hint_;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t i = (start + k) % n;
      if (boxes_[i].distance(p) >= best) continue;
      const double d = distance_to_convex(members_[i], p);
      if (d < best) {
        best = d;
        hint_ = i;
        if (best <= cutoff) break;
      }
    }
    return best;
  }

 private:
  const std::vector<Polygon>& members_;
  std::vector<Box> boxes_;
  std::size_t hint_ = 0;
};

}  // namespace

bool IconvRegion::contains(Point2 p, double slack) const { return distance(p) <= slack; }

double IconvRegion::distance(Point2 p) const { return UnionDistance(members)(p); }

IconvRegion iconv(const Polygon& p, std::span<const Point2> satellites) {
  if (p.empty()) throw DomainError("iconv: empty base polygon");
  IconvRegion out;
  out.base = p;
  out.satellites.assign(satellites.begin(), satellites.end());
  if (satellites.empty()) {
    out.members.push_back(p);
    return out;
  }
  out.members.reserve(satellites.size());
  std::vector<Point2> pts;
  for (const auto& s : satellites) {
    pts.assign(p.begin(), p.end());
    pts.push_back(s);
    out.members.push_back(convex_hull(pts));
  }
  return out;
}

IconvRegion upper_half(const IconvRegion& region) {
  IconvRegion out;
  out.base = upper_half(region.base);
  for (const auto& s : region.satellites) {
    if (s.b >= 0.0) out.satellites.push_back(s);
  }
  for (const auto& m : region.members) {
    Polygon clipped = upper_half(m);
    if (!clipped.empty()) out.members.push_back(std::move(clipped));
  }
  return out;
}

double hausdorff(const IconvRegion& region, const Polygon& q, double spacing) {
  if (q.empty()) throw DomainError("hausdorff: empty polygon");
  if (!(spacing > 0.0)) throw DomainError("hausdorff: spacing must be positive");
  double h = 0.0;
  // Distance to a convex set is convex, so its max over a member sits at a vertex.
  for (const auto& poly : region.members) {
    for (const auto& v : poly) h = std::max(h, distance_to_convex(q, v));
  }
  std::vector<Point2> probes = densify_boundary(q, spacing / 4.0);
  probes.insert(probes.end(), q.begin(), q.end());
  if (q.size() >= 3) {
    double lo_a = q[0].a, hi_a = q[0].a, lo_b = q[0].b, hi_b = q[0].b;
    for (const auto& v : q) {
      lo_a = std::min(lo_a, v.a);
      hi_a = std::max(hi_a, v.a);
      lo_b = std::min(lo_b, v.b);
      hi_b = std::max(hi_b, v.b);
    }
    for (double a = lo_a; a <= hi_a; a += spacing) {
      for (double b = lo_b; b <= hi_b; b += spacing) {
        if (qnr::contains(q, {a, b}, 0.0)) probes.push_back({a, b});
      }
    }
  }
  UnionDistance dist(region.members);
  for (const auto& p : probes) h = std::max(h, dist(p, h));
  return h;
}

LancasterReport lancaster_check(const ModelOperator& m, const LancasterOptions& options) {
  if (options.sections.empty()) throw DomainError("lancaster_check: no section sizes");
  LancasterReport report;
  report.essential = essential_bild(m);
  report.essential_upper = upper_half(report.essential);
  std::vector<double> outer;
  for (const std::size_t n : options.sections) {
    const TruncatedOperator t = truncate(m, n);
    BildRegion region = upper_bild(t.matrix, options.bild);
    // The bild is mirror symmetric but not convex: mirror the points, not the hull.
    std::vector<Point2> sats = densify_boundary(region.inner_hull, options.satellite_spacing);
    const std::size_t upper_count = sats.size();
    for (std::size_t i = 0; i < upper_count; ++i) {
      if (sats[i].b > 0.0) sats.push_back({sats[i].a, -sats[i].b});
    }
    IconvRegion l = upper_half(iconv(report.essential, sats));
    LancasterRow row;
    row.section = n;
    row.hausdorff_outer = hausdorff(l, region.outer_polygon, options.sample_spacing);
    if (options.reference) {
      row.hausdorff_reference = hausdorff(l, *options.reference, options.sample_spacing);
    }
    row.bild_gap = region.hausdorff_gap;
    row.satellites = sats.size();
    outer.push_back(row.hausdorff_outer);
    report.rows.push_back(row);
    if (options.keep_regions) {
      report.regions.push_back(std::move(region));
      report.iconv_regions.push_back(std::move(l));
    }
  }
  report.monotone = true;
  for (std::size_t i = 1; i < outer.size(); ++i) {
    if (outer[i] > outer[i - 1] + options.monotone_slack) report.monotone = false;
  }
  report.final_distance =
      options.reference ? report.rows.back().hausdorff_reference : report.rows.back().hausdorff_outer;
  report.pass = report.monotone && report.final_distance <= options.tolerance;
  return report;
}

std::vector<ProbeRow> nonclosedness_probe(std::span<const BildRegion> regions,
                                          std::span<const std::size_t> sections, Point2 edge0,
                                          Point2 edge1) {
  if (regions.size() != sections.size()) {
    throw DomainError("nonclosedness_probe: one region per section expected");
  }
  constexpr int kSamples = 200;
  std::vector<ProbeRow> out;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    double r = 0.0;
    for (int s = 0; s <= kSamples + 1; ++s) {
      const double t = static_cast<double>(s) / (kSamples + 1);
      r = std::max(r, distance_to_convex(regions[i].inner_hull, edge0 + t * (edge1 - edge0)));
    }
    out.push_back({sections[i], r});
  }
  return out;
}

std::vector<ProbeRow> nonclosedness_probe(const ModelOperator& m, Point2 edge0, Point2 edge1,
                                          std::span<const std::size_t> sections,
                                          const BildOptions& options) {
  std::vector<BildRegion> regions;
  for (const std::size_t n : sections) regions.push_back(upper_bild(truncate(m, n).matrix, options));
  return nonclosedness_probe(regions, sections, edge0, edge1);
}

}  // namespace qnr
