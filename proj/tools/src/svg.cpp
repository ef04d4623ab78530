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

#include "qnr/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace qnr::svg {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

Canvas::Canvas(Point2 lo, Point2 hi, int pixels) : lo_(lo), hi_(hi), pixels_(pixels) {
  // Equal scale on both axes.
  const double span = std::max({hi_.a - lo_.a, hi_.b - lo_.b, 1e-9});
  const Point2 mid = 0.5 * (lo_ + hi_);
  lo_ = {mid.a - span / 2, mid.b - span / 2};
  hi_ = {mid.a + span / 2, mid.b + span / 2};
}

double Canvas::x(double a) const { return (a - lo_.a) / (hi_.a - lo_.a) * pixels_; }
double Canvas::y(double b) const { return (hi_.b - b) / (hi_.b - lo_.b) * pixels_; }

void Canvas::polygon(const Polygon& p, const std::string& stroke, const std::string& fill,
                     double opacity) {
  if (p.empty()) return;
  std::string pts;
  for (const auto& v : p) pts += num(x(v.a)) + "," + num(y(v.b)) + " ";
  if (p.size() == 1) pts += num(x(p[0].a) + 0.5) + "," + num(y(p[0].b)) + " ";
  items_.push_back("<polygon points=\"" + pts + "\" stroke=\"" + stroke + "\" fill=\"" + fill +
                   "\" fill-opacity=\"" + num(opacity) + "\" stroke-width=\"1\"/>");
}

void Canvas::points(std::span<const Point2> pts, const std::string& color, std::size_t max_points) {
  const std::size_t step = std::max<std::size_t>(1, pts.size() / std::max<std::size_t>(1, max_points));
  for (std::size_t i = 0; i < pts.size(); i += step) {
    items_.push_back("<circle cx=\"" + num(x(pts[i].a)) + "\" cy=\"" + num(y(pts[i].b)) +
                     "\" r=\"0.8\" fill=\"" + color + "\"/>");
  }
}

std::string Canvas::str() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(pixels_) +
                    "\" height=\"" + std::to_string(pixels_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Real axis.
  out += "<line x1=\"0\" y1=\"" + num(y(0.0)) + "\" x2=\"" + std::to_string(pixels_) + "\" y2=\"" +
         num(y(0.0)) + "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  for (const auto& item : items_) out += item + "\n";
  return out + "</svg>\n";
}

std::pair<Point2, Point2> bounds(std::span<const Polygon> polys) {
  Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi{-lo.a, -lo.b};
  for (const auto& p : polys)
    for (const auto& v : p) {
      lo = {std::min(lo.a, v.a), std::min(lo.b, v.b)};
      hi = {std::max(hi.a, v.a), std::max(hi.b, v.b)};
    }
  if (lo.a > hi.a) return {{-1.0, -1.0}, {1.0, 1.0}};
  const double pad = 0.05 * std::max({hi.a - lo.a, hi.b - lo.b, 0.2});
  return {{lo.a - pad, lo.b - pad}, {hi.a + pad, hi.b + pad}};
}

}  // namespace qnr::svg
