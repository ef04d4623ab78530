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

#include "../support/convert.hpp"
#include "qnr/error.hpp"
#include "qnr/essential.hpp"
#include "qnr/numerical_range.hpp"
#include "qnr/random.hpp"
#include "qnr/spectrum.hpp"

using namespace qnr;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();

ModelOperator segment_example() {
  return ModelOperator(QMatrix::diagonal({Quaternion{-1, 1, 0, 0}, Quaternion{1, 1, 0, 0}}),
                       TailSymbol::rationals(0.5), {LimitEntry::segment(0.0, 0.0, 0.5)}, 1.5);
}

ModelOperator constant_tail(const Quaternion& q, QMatrix block = QMatrix(0)) {
  return ModelOperator(std::move(block), TailSymbol::constant(q), {LimitEntry::sphere(csim(q).a, csim(q).b)},
                       abs(q));
}

Polygon exact_polygon(std::initializer_list<Point2> pts) { return convex_hull(std::vector<Point2>(pts)); }

}  // namespace

TEST_CASE("rationals tail enumeration") {
  // Denominators ascending, numerators ascending, reduced, |p/q| < 1/2.
  const double expected[] = {0.0, -1.0 / 3, 1.0 / 3, -1.0 / 4, 1.0 / 4, -2.0 / 5, -1.0 / 5, 1.0 / 5, 2.0 / 5};
  for (std::size_t n = 1; n <= 9; ++n) CHECK(farey_term(0.5, n) == expected[n - 1]);
  const ModelOperator m = segment_example();
  for (std::size_t n = 1; n <= 5000; ++n) {
    const Quaternion s = m.symbol(n);
    CHECK(s.w == 0.0);
    CHECK(std::fabs(s.x) < 0.5);
  }
  CHECK_NOTHROW(m.validate(100000));
}

TEST_CASE("model operator construction errors") {
  CHECK_THROWS_AS(ModelOperator(QMatrix(0), TailSymbol::constant(I), {}, 1.0), DomainError);
  CHECK_THROWS_AS(ModelOperator(QMatrix(0), TailSymbol::constant(I), {LimitEntry::sphere(0, 1)}, -1.0),
                  DomainError);
  // Bound violated.
  const ModelOperator loose(QMatrix(0), TailSymbol::constant(2.0 * I), {LimitEntry::sphere(0, 2)}, 1.0);
  CHECK_THROWS_AS(loose.validate(10), DomainError);
  // Declared limit point never approached.
  const ModelOperator wrong(QMatrix(0), TailSymbol::constant(I), {LimitEntry::sphere(0, 0.5)}, 1.0);
  CHECK_THROWS_AS(wrong.validate(1000), DomainError);
  CHECK_THROWS_AS(TailSymbol::periodic({}), DomainError);
}

TEST_CASE("truncate examples") {
  const ModelOperator h(QMatrix(0), TailSymbol::harmonic(I), {LimitEntry::sphere(0, 0)}, 1.0);
  CHECK(truncate(h, 2).matrix == QMatrix::diagonal({I, I / 2.0}));
  const TruncatedOperator r = truncate(segment_example(), 1);
  CHECK(r.matrix == QMatrix::diagonal({Quaternion{-1, 1, 0, 0}, Quaternion{1, 1, 0, 0}, Quaternion{}}));
  const Quaternion q{1, 0, 2, 0};
  CHECK(truncate(constant_tail(q, QMatrix(1)), 3).matrix == QMatrix::diagonal({Quaternion{}, q, q, q}));
  CHECK_THROWS_AS(truncate(h, 0), DomainError);
}

TEST_CASE("sparse application agrees with the truncation") {
  Rng rng = make_rng(41, "apply");
  const ModelOperator m(random_matrix(3, rng), TailSymbol::periodic({I, Quaternion{1, 0, 1, 0}}),
                        {LimitEntry::sphere(0, 1), LimitEntry::sphere(1, 1)}, 2.0);
  const TruncatedOperator t = truncate(m, 10);
  const SparseVector x({{0, Quaternion{0.5}}, {2, J}, {6, Quaternion{0, 0, 0, 2}}, {12, I}});
  const QVector dense = x.to_dense(13);
  CHECK(m.apply(x).to_dense(13) == qnr::apply(t, dense));
  CHECK(m.apply_adjoint(x).to_dense(13) == qnr::apply_adjoint(t, dense));
}

TEST_CASE("essential bild examples") {
  CHECK(essential_bild(segment_example()) == exact_polygon({{0, -0.5}, {0, 0.5}}));
  CHECK(essential_bild(constant_tail(Quaternion{2.0})) == Polygon{{2.0, 0.0}});
  const ModelOperator alt(QMatrix(0), TailSymbol::periodic({I, -I}), {LimitEntry::sphere(0, 1)}, 1.0);
  CHECK(essential_bild(alt) == exact_polygon({{0, -1}, {0, 1}}));
  CHECK(essential_bild_upper(segment_example()) == exact_polygon({{0, 0}, {0, 0.5}}));
}

TEST_CASE("essential bild ignores the block") {
  Rng rng = make_rng(42, "compact");
  const ModelOperator m = segment_example();
  for (int t = 0; t < 10; ++t) {
    const QMatrix other = random_matrix(1 + static_cast<std::size_t>(t % 4), rng);
    CHECK(essential_bild(m.with_block(other)) == essential_bild(m));
  }
}

TEST_CASE("essential bild of the adjoint") {
  const ModelOperator m(QMatrix::diagonal({I}), TailSymbol::periodic({Quaternion{1, 2, 0, 0}, Quaternion{-1, 0, 0, 1}}),
                        {LimitEntry::sphere(1, 2), LimitEntry::sphere(-1, 1)}, 3.0);
  CHECK(essential_bild(m.adjoint()) == essential_bild(m));
  CHECK(m.adjoint().symbol(1) == conj(m.symbol(1)));
  CHECK(truncate(m.adjoint(), 4).matrix == adjoint(truncate(m, 4).matrix));
}

TEST_CASE("essential bild under real affine maps") {
  const ModelOperator m(QMatrix(0), TailSymbol::periodic({Quaternion{1, 2, 0, 0}, Quaternion{-1, 0, 0, 1}, Quaternion{0.5}}),
                        {LimitEntry::sphere(1, 2), LimitEntry::sphere(-1, 1), LimitEntry::sphere(0.5, 0)}, 3.0);
  for (const auto [a, b] : {std::pair{2.0, -1.0}, std::pair{-3.0, 0.5}}) {
    Polygon mapped;
    for (const auto& v : essential_bild(m)) mapped.push_back({a * v.a + b, std::fabs(a) * v.b});
    CHECK(essential_bild(m.affine(a, b)) == convex_hull(mapped));
  }
}

TEST_CASE("infinite-multiplicity eigenvalues belong to the essential bild") {
  for (const Quaternion q : {Quaternion{2.0}, Quaternion{1, 1, 1, 0}, Quaternion{0, 0, 0, -3}}) {
    const Polygon p = essential_bild(constant_tail(q, QMatrix::diagonal({q * 2.0})));
    CHECK(distance_to_convex(p, {csim(q).a, csim(q).b}) == 0.0);
  }
}

TEST_CASE("essential sequences converge with rotated basis vectors") {
  const ModelOperator m = segment_example();
  const EssentialSequence s = essential_sequence(m, Quaternion{0, 0, 0.25, 0}, {.length = 64});
  REQUIRE(s.vectors.size() == 64);
  for (std::size_t j = 0; j < s.vectors.size(); ++j) {
    CHECK(s.vectors[j].norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(s.errors[j] <= 1.0 / (2.0 * static_cast<double>(j + 1)) + 1e-14);
    if (j > 0) CHECK(s.tail_indices[j] > s.tail_indices[j - 1]);
  }
  CHECK_THROWS_AS(essential_sequence(m, Quaternion{1.0}), DomainError);
  CHECK_THROWS_AS(essential_sequence(m, Quaternion{0, 0.25, 0, 0}, {.length = 10, .leak = 0, .search_limit = 3}),
                  NumericalError);
}

TEST_CASE("quasi_orth_select examples") {
  const TruncatedOperator t = truncate(segment_example(), 20);
  std::vector<QVector> xs, ys;
  for (std::size_t k = 0; k < 10; ++k) {
    xs.push_back(basis_vector(22, 2 + 2 * k));
    ys.push_back(basis_vector(22, 3 + 2 * k));
  }
  const SelectResult r = quasi_orth_select<TruncatedOperator, QVector>(t, xs, ys, 4, 1e-6);
  CHECK(r.index == 4);
  CHECK(r.worst() == 0.0);

  Rng rng = make_rng(43, "select");
  std::vector<QVector> rx, ry;
  for (int k = 0; k < 5; ++k) {
    rx.push_back(random_unit_vector(22, rng));
    ry.push_back(random_unit_vector(22, rng));
  }
  const double big = frobenius(t.matrix) + 1.0;
  CHECK(quasi_orth_select<TruncatedOperator, QVector>(t, rx, ry, 2, big).index == 2);

  // Identical lists: M = n fails on the inner product, M = n + 1 is disjoint.
  CHECK(quasi_orth_select<TruncatedOperator, QVector>(t, xs, xs, 0, 1e-6).index == 1);
}

TEST_CASE("quasi_orth_select exhaustion reports the best triple") {
  const TruncatedOperator t = truncate(segment_example(), 4);
  const std::vector<QVector> xs{basis_vector(6, 2)};
  const std::vector<QVector> ys{basis_vector(6, 2)};
  try {
    quasi_orth_select<TruncatedOperator, QVector>(t, xs, ys, 0, 1e-6);
    FAIL("expected exhaustion");
  } catch (const SelectionExhausted& e) {
    CHECK(e.best().inner == 1.0);
  }
}

TEST_CASE("convex combination examples") {
  const ModelOperator m = segment_example();
  const Quaternion top{0, 0.5, 0, 0};
  const Quaternion bottom{0, -0.5, 0, 0};
  // alpha = 1 reproduces the first sequence.
  const CombinationSequence one = convex_combination_sequence(m, top, bottom, 1.0, 50);
  for (std::size_t p = 1; p <= 50; ++p) CHECK(one.errors[p - 1] <= 1.0 / static_cast<double>(p) + 1e-14);
  CHECK(one.predicted == top);

  // Midpoint of the essential segment.
  const CombinationSequence mid = convex_combination_sequence(m, top, bottom, std::sqrt(0.5), 200);
  CHECK(abs(mid.predicted) <= 1e-15);
  CHECK(abs(mid.values.back()) <= 5.0 * (2.0 + m.norm_bound()) / 200.0);
  CHECK(mid.error_constant <= 2.0 + m.norm_bound());
  for (std::size_t p = 1; p <= 200; ++p) {
    const SelectResult& s = mid.selections[p - 1];
    CHECK(s.worst() <= 1.0 / static_cast<double>(p));
    CHECK(mid.vectors[p - 1].norm() == doctest::Approx(1.0).epsilon(1e-13));
  }

  const Quaternion q{0.5, 0, 1, 0};
  const CombinationSequence c = convex_combination_sequence(constant_tail(q), q, q, 0.6, 100);
  CHECK(abs(c.values.back() - q) <= 1e-14);
}

TEST_CASE("combinations with leaked block weight still converge") {
  Rng rng = make_rng(44, "leak");
  const ModelOperator m(random_matrix(3, rng), TailSymbol::periodic({Quaternion{1, 1, 0, 0}, Quaternion{-0.5, 0, 0, 2}}),
                        {LimitEntry::sphere(1, 1), LimitEntry::sphere(-0.5, 2)}, 2.1);
  const SequenceOptions o{.length = 256, .leak = 1.0, .search_limit = 5000000};
  for (double a2 : {0.0, 0.3, 0.5, 0.9, 1.0}) {
    const CombinationSequence c =
        convex_combination_sequence(m, Quaternion{1, 1, 0, 0}, Quaternion{-0.5, 2, 0, 0}, std::sqrt(a2), 200, o);
    CHECK(abs(c.values.back() - c.predicted) <= 5.0 * (2.0 + m.norm_bound()) / 200.0);
    for (std::size_t p = 1; p <= 200; ++p) CHECK(c.selections[p - 1].worst() <= 1.0 / static_cast<double>(p));
  }
}

TEST_CASE("essential membership") {
  const ModelOperator m = segment_example();
  CHECK(we_membership(m, Quaternion{0, 0.25, 0, 0}, 1e-9));
  CHECK(we_membership(m, Quaternion{0, 0, -0.25, 0}, 1e-9));
  CHECK_FALSE(we_membership(m, Quaternion{1.0}, 1e-9));
  CHECK_FALSE(we_membership(m, Quaternion{0, 10, 0, 0}, 1e-9));
  const MembershipReport r = we_membership_report(m, Quaternion{0, 0.25, 0, 0}, 1e-9, 200);
  CHECK(r.constructed);
  CHECK(r.constructive_error <= 5.0 * (2.0 + m.norm_bound()) / 200.0);
}

TEST_CASE("membership inside a triangle is constructed from three generators") {
  const ModelOperator m(QMatrix(0), TailSymbol::periodic({Quaternion{1.0}, Quaternion{-1.0}, Quaternion{0, 1, 0, 0}}),
                        {LimitEntry::sphere(1, 0), LimitEntry::sphere(-1, 0), LimitEntry::sphere(0, 1)}, 1.0);
  const MembershipReport r = we_membership_report(m, Quaternion{0.1, 0.3, 0, 0}, 1e-9, 200);
  CHECK(r.member);
  CHECK(r.constructed);
  CHECK(r.constructive_error <= 5.0 * (2.0 + m.norm_bound()) / 200.0);
}

TEST_CASE("limit spheres and truncation spectra lie in the essential bild") {
  for (const ModelOperator& m :
       {segment_example(), constant_tail(Quaternion{0, 1, 1, 0}, QMatrix::diagonal({Quaternion{3.0}})),
        ModelOperator(QMatrix::diagonal({Quaternion{5.0}}), TailSymbol::explicit_list({Quaternion{7.0}}, I),
                      {LimitEntry::sphere(0, 1)}, 7.0)}) {
    const Polygon p = essential_bild(m);
    for (const auto& e : m.limit_set()) {
      CHECK(distance_to_convex(p, {e.a, e.b0}) == 0.0);
      CHECK(distance_to_convex(p, {e.a, e.b1}) == 0.0);
    }
    const SphereSet block = s_spectrum(m.block());
    const SphereSet sections = s_spectrum(truncate(m, 200).matrix);
    // Only finitely many explicit entries may sit outside.
    std::size_t outside = 0;
    for (const auto& sp : sections.spheres) {
      const bool in = distance_to_convex(p, {sp.a, sp.b}) <= 1e-3 || block.contains(sp, 1e-3);
      if (!in) ++outside;
    }
    CHECK(outside <= 1);
  }
}

TEST_CASE("far-window compressions approach the essential bild for any block") {
  Rng rng = make_rng(45, "window");
  const ModelOperator a = segment_example();
  const ModelOperator b = a.with_block(random_matrix(3, rng));
  const Polygon target = essential_bild_upper(a);
  double previous = 1e9;
  for (const std::size_t n : {50u, 100u, 200u}) {
    double gap[2];
    int idx = 0;
    for (const ModelOperator* m : {&a, &b}) {
      const TruncatedOperator t = truncate(*m, n);
      std::vector<std::size_t> window;
      for (std::size_t k = t.block_size + n / 2; k < t.block_size + n; ++k) window.push_back(k);
      BildOptions o;
      o.samples = 2000;
      o.angles = 90;
      const BildRegion r = upper_bild(principal_submatrix(t.matrix, window), o);
      gap[idx++] = hausdorff(r.inner_hull, target);
    }
    CHECK(gap[0] == gap[1]);
    CHECK(gap[0] < previous);
    previous = gap[0];
  }
  CHECK(previous <= 0.03);
}
