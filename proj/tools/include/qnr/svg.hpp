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
#include <string>
#include <vector>

#include "qnr/geometry.hpp"

namespace qnr::svg {

/// Minimal SVG writer in bild coordinates; b grows upward.
class Canvas {
 public:
  Canvas(Point2 lo, Point2 hi, int pixels = 640);

  void polygon(const Polygon& p, const std::string& stroke, const std::string& fill,
               double opacity = 1.0);
  /// Capped at max_points, taking every k-th point.
  void points(std::span<const Point2> pts, const std::string& color, std::size_t max_points = 5000);

  std::string str() const;

 private:
  double x(double a) const;
  double y(double b) const;

  Point2 lo_;
  Point2 hi_;
  int pixels_;
  std::vector<std::string> items_;
};

/// Bounding box of the given polygons, padded by 5%.
std::pair<Point2, Point2> bounds(std::span<const Polygon> polys);

}  // namespace qnr::svg
