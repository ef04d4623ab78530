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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../support/convert.hpp"
#include "qnr/error.hpp"
#include "qnr/numerical_range.hpp"
#include "qnr/random.hpp"

using namespace qnr;

namespace {

const Quaternion I = Quaternion::i();

BildOptions small(std::size_t samples = 20000, std::size_t angles = 90) {
  BildOptions o;
  o.samples = samples;
  o.angles = angles;
  return o;
}

// Symmetric matrix of x -> cos(t) Re<Tx,x> + sin(t) <Tx,x>_i over R^{4n},
// assembled from oracle evaluations of the quadratic form.
std::vector<std::vector<double>> support_form(const QMatrix& t, double theta) {
  const auto qt = testing::to_q(t);
  const std::size_t d = 4 * t.size();
  auto form = [&](const std::vector<double>& v) {
    std::vector<oracle::Q> x(t.size());
    for (std::size_t k = 0; k < d; ++k) x[k / 4][k % 4] = v[k];
    const auto q = oracle::quadratic(qt, x);
    return std::cos(theta) * q[0] + std::sin(theta) * q[1];
  };
  std::vector<std::vector<double>> m(d, std::vector<double>(d));
  std::vector<double> e(d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::fill(e.begin(), e.end(), 0.0);
      e[i] += 1.0;
      e[j] += 1.0;
      const double both = form(e);
      std::fill(e.begin(), e.end(), 0.0);
      e[i] = 1.0;
      const double fi = form(e);
      std::fill(e.begin(), e.end(), 0.0);
      e[j] = 1.0;
      const double fj = form(e);
      m[i][j] = i == j ? fi : 0.5 * (both - fi - fj);
    }
  return m;
}

}  // namespace

TEST_CASE("nr_sample examples") {
  for (const auto& v : nr_sample(QMatrix::identity(3), 500, 1)) {
    CHECK(testing::qdist(v, Quaternion{1.0}) <= 1e-14);
  }
  const Quaternion q{0.5, -1, 2, 0.25};
  for (const auto& v : nr_sample(QMatrix::diagonal({q}), 500, 2)) {
    CHECK(csim(v).a == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(csim(v).b == doctest::Approx(csim(q).b).epsilon(1e-13));
  }
  const QMatrix nil{{Quaternion{}, Quaternion{1.0}}, {Quaternion{}, Quaternion{}}};
  double worst = 0.0;
  for (const auto& v : nr_sample(nil, 20000, 3)) worst = std::max(worst, abs(v));
  CHECK(worst <= 0.5 + 1e-14);
  CHECK(worst >= 0.45);
  CHECK_THROWS_AS(nr_sample(nil, 0, 1), DomainError);
}

TEST_CASE("nr_sample matches the oracle quadratic form and is seeded") {
  Rng rng = make_rng(31, "nr");
  const QMatrix t = random_matrix(3, rng);
  const auto a = nr_sample(t, 3000, 9);
  const auto b = nr_sample(t, 3000, 9);
  CHECK(a == b);
  CHECK(nr_sample(t, 3000, 10) != a);
  // Sampling is unit-vector based: values lie in the disc of radius |T|_F.
  for (const auto& v : a) CHECK(abs(v) <= frobenius(t) + 1e-12);
  // A direct oracle evaluation at a few vectors.
  for (int s = 0; s < 20; ++s) {
    const QVector x = random_unit_vector(3, rng);
    const auto ref = oracle::quadratic(testing::to_q(t), testing::to_q(x));
    CHECK(testing::qdist(quadratic_value(t, x), testing::from_q(ref)) <= 1e-13);
  }
}

TEST_CASE("support function examples") {
  const Quaternion q{0.3, 0, -1.2, 0.5};
  const QMatrix d = QMatrix::diagonal({q});
  for (double th : {0.0, 0.4, 1.3, 2.9, std::numbers::pi}) {
    CHECK(upper_bild_support(d, th) ==
          doctest::Approx(0.3 * std::cos(th) + csim(q).b * std::sin(th)).epsilon(1e-12));
    CHECK(upper_bild_support(QMatrix::identity(2), th) == doctest::Approx(std::cos(th)).scale(1.0));
  }
  const QMatrix remark = QMatrix::diagonal({Quaternion{-1, 1, 0, 0}, Quaternion{1, 1, 0, 0}});
  CHECK(upper_bild_support(remark, std::numbers::pi / 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(upper_bild_support(remark, -0.1), DomainError);
  CHECK_THROWS_AS(upper_bild_support(remark, 3.5), DomainError);
}

TEST_CASE("support function matches an independently assembled eigenproblem") {
  Rng rng = make_rng(32, "support");
  for (int t = 0; t < 4; ++t) {
    const QMatrix a = random_matrix(2, rng);
    for (double th : {0.2, 1.0, 2.2}) {
      const double ref = oracle::power_max(support_form(a, th), 40000);
      CHECK(upper_bild_support(a, th) == doctest::Approx(ref).epsilon(1e-7));
      const SupportPoint sp = upper_bild_support_point(a, th);
      CHECK(sp.value == doctest::Approx(ref).epsilon(1e-7));
      CHECK(std::cos(th) * sp.point.a + std::sin(th) * sp.point.b == doctest::Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("upper_bild examples") {
  const BildRegion p = upper_bild(3.0 * QMatrix::identity(2), small());
  CHECK(p.hausdorff_gap <= 1e-9);
  for (const auto& v : p.outer_polygon) CHECK(dist(v, {3.0, 0.0}) <= 1e-9);

  const BildRegion s = upper_bild(QMatrix::diagonal({I}), small());
  CHECK(s.hausdorff_gap <= 1e-9);
  for (const auto& v : s.outer_polygon) CHECK(dist(v, {0.0, 1.0}) <= 1e-9);

  const QMatrix remark = QMatrix::diagonal({Quaternion{-1, 1, 0, 0}, Quaternion{1, 1, 0, 0}});
  const BildRegion r = upper_bild(remark, small(20000, 360));
  const Polygon triangle = convex_hull(std::vector<Point2>{{-1, 1}, {1, 1}, {0, 0}});
  CHECK(hausdorff(r.outer_polygon, triangle) <= 1e-6);
  CHECK(r.exact);
}

TEST_CASE("outer polygon dominates inner points") {
  Rng rng = make_rng(33, "dominate");
  for (int t = 0; t < 5; ++t) {
    const QMatrix a = random_matrix(1 + static_cast<std::size_t>(t % 3) + 1, rng);
    const BildRegion r = upper_bild(a, small(5000, 60));
    double worst = 0.0;
    for (const auto& p : r.inner_points) worst = std::max(worst, distance_to_convex(r.outer_polygon, p));
    CHECK(worst <= 1e-9);
    for (const auto& v : r.outer_polygon) CHECK(v.b >= -1e-12);
    CHECK(r.hausdorff_gap >= 0.0);
    CHECK(r.hausdorff_gap == doctest::Approx(hausdorff(r.inner_hull, r.outer_polygon)));
  }
}

TEST_CASE("refining the angle grid shrinks the outer polygon") {
  Rng rng = make_rng(34, "nested");
  for (int t = 0; t < 4; ++t) {
    const QMatrix a = random_matrix(3, rng);
    const BildRegion coarse = upper_bild(a, small(2000, 40));
    const BildRegion fine = upper_bild(a, small(2000, 80));
    for (const auto& v : fine.outer_polygon) CHECK(distance_to_convex(coarse.outer_polygon, v) <= 1e-9);
  }
}

TEST_CASE("affine maps act on supports") {
  Rng rng = make_rng(35, "affine");
  const QMatrix t = random_matrix(3, rng);
  for (const auto [a, b] : {std::pair{2.0, 0.5}, std::pair{-1.5, 1.0}}) {
    const QMatrix s = affine(t, a, b);
    for (double th : {0.0, 0.7, 1.6, 2.5, std::numbers::pi}) {
      // (x, y) -> (a x + b, |a| y)
      const double expected = a > 0 ? b * std::cos(th) + a * upper_bild_support(t, th)
                                    : b * std::cos(th) - a * upper_bild_support(t, std::numbers::pi - th);
      CHECK(upper_bild_support(s, th) == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("diagonal bild against a brute-force sampling oracle") {
  Rng rng = make_rng(36, "diag");
  std::normal_distribution<double> g;
  for (int t = 0; t < 5; ++t) {
    std::vector<Quaternion> d;
    for (int k = 0; k < 3; ++k) d.push_back({g(rng), g(rng), g(rng), g(rng)});
    const Polygon hull = diagonal_upper_bild(d);
    std::vector<Point2> cloud;
    for (int s = 0; s < 200000; ++s) {
      const auto x = oracle::unit_vector(3, rng);
      std::vector<std::vector<oracle::Q>> m(3, std::vector<oracle::Q>(3, oracle::Q{}));
      for (int k = 0; k < 3; ++k) m[k][k] = testing::to_q(d[k]);
      const auto b = oracle::bild(oracle::quadratic(m, x));
      cloud.push_back({b[0], b[1]});
    }
    double outside = 0.0;
    for (const auto& p : cloud) outside = std::max(outside, distance_to_convex(hull, p));
    CHECK(outside <= 1e-9);
    // The sampled hull approaches the exact one.
    CHECK(hausdorff(convex_hull(cloud), hull) <= 0.1);
  }
}

TEST_CASE("real_section") {
  const Interval one = real_section(QMatrix::identity(2), small());
  CHECK(one.lo == doctest::Approx(1.0));
  CHECK(one.hi == doctest::Approx(1.0));
  const Interval ii = real_section(QMatrix::diagonal({I, I}), small());
  CHECK(std::fabs(ii.lo) <= 1e-5);
  CHECK(std::fabs(ii.hi) <= 1e-5);
  const QMatrix remark = QMatrix::diagonal({Quaternion{-1, 1, 0, 0}, Quaternion{1, 1, 0, 0}});
  const Interval r = real_section(remark, small());
  CHECK(std::fabs(r.lo) <= 1e-5);
  CHECK(std::fabs(r.hi) <= 1e-5);
  // A single sphere off the axis has no real point at all.
  CHECK_THROWS_AS(real_section(QMatrix::diagonal({I}), small()), NumericalError);
}

TEST_CASE("real_section of dense matrices is attained") {
  Rng rng = make_rng(37, "real");
  for (int t = 0; t < 3; ++t) {
    const QMatrix a = random_matrix(3, rng);
    const BildRegion region = upper_bild(a, small(20000, 90));
    const Interval r = real_section(region);
    CHECK(r.lo <= r.hi);
    CHECK(distance_to_convex(region.outer_polygon, {r.lo, 0.0}) <= 1e-6);
    CHECK(distance_to_convex(region.outer_polygon, {r.hi, 0.0}) <= 1e-6);
  }
}

TEST_CASE("components split block-diagonal structure") {
  QMatrix t(4);
  t(0, 0) = Quaternion{1.0};
  t(0, 2) = I;
  t(2, 0) = Quaternion{2.0};
  t(1, 1) = Quaternion{3.0};
  t(3, 3) = Quaternion{4.0};
  const auto cs = components(t);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].indices == std::vector<std::size_t>{0, 2});
  CHECK(cs[0].block(0, 1) == I);
  CHECK(cs[1].indices == std::vector<std::size_t>{1});
  CHECK(cs[2].indices == std::vector<std::size_t>{3});
}

TEST_CASE("angle grid") {
  const auto g = angle_grid(4);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == std::numbers::pi);
  CHECK(g[2] == doctest::Approx(std::numbers::pi / 2));
}
