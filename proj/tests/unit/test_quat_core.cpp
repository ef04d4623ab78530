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
#include "qnr/polarization.hpp"
#include "qnr/qvector.hpp"
#include "qnr/random.hpp"

using namespace qnr;
using qnr::testing::qdist;
using qnr::testing::to_q;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

}  // namespace

TEST_CASE("hamilton product relations") {
  CHECK(I * J == K);
  CHECK(J * K == I);
  CHECK(K * I == J);
  CHECK(J * I == -K);
  CHECK(I * I == Quaternion{-1.0});
  CHECK(I * J * K == Quaternion{-1.0});
  CHECK((Quaternion{1, 1, 0, 0} * Quaternion{1, -1, 0, 0}) == Quaternion{2.0});
}

TEST_CASE("square of 1+i+j+k against the matrix-form product") {
  const Quaternion q{1, 1, 1, 1};
  const auto ref = oracle::hamilton(to_q(q), to_q(q));
  CHECK(ref == oracle::Q{-2, 2, 2, 2});
  CHECK(q * q == Quaternion{-2, 2, 2, 2});
}

TEST_CASE("product agrees with the matrix form on random inputs") {
  Rng rng = make_rng(11, "product");
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    const Quaternion p{g(rng), g(rng), g(rng), g(rng)};
    const Quaternion q{g(rng), g(rng), g(rng), g(rng)};
    const auto ref = oracle::hamilton(to_q(p), to_q(q));
    CHECK(qdist(p * q, testing::from_q(ref)) <= 1e-14 * (1 + abs(p) * abs(q)));
    CHECK(std::fabs(abs(p * q) - abs(p) * abs(q)) <= 1e-12 * (1 + abs(p) * abs(q)));
    CHECK(qdist(conj(p * q), conj(q) * conj(p)) <= 1e-13 * (1 + abs(p) * abs(q)));
    CHECK(qdist((p * q) * p, p * (q * p)) <= 1e-12 * (1 + abs(p) * abs(p) * abs(q)));
  }
}

TEST_CASE("conjugate, real and imaginary parts") {
  const Quaternion q{1.5, -2, 0.25, 3};
  const Quaternion n = conj(q) * q;
  CHECK(n.x == 0.0);
  CHECK(n.y == 0.0);
  CHECK(n.z == 0.0);
  CHECK(n.w == doctest::Approx(norm2(q)));
  CHECK(re(q) == 1.5);
  CHECK(im(q).w == 0.0);
  CHECK(qdist(q * inverse(q), Quaternion{1.0}) <= 1e-15);
}

TEST_CASE("csim examples") {
  CHECK(csim(Quaternion{3, 0, 4, 0}).a == 3.0);
  CHECK(csim(Quaternion{3, 0, 4, 0}).b == 4.0);
  CHECK(csim(Quaternion{5.0}).b == 0.0);
  const SimilaritySphere s = csim(Quaternion{-1, 1, 0, 0});
  CHECK(s.a == -1.0);
  CHECK(s.b == 1.0);
}

TEST_CASE("csim is constant on similarity orbits") {
  Rng rng = make_rng(7, "orbit");
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    const Quaternion q{g(rng), g(rng), g(rng), g(rng)};
    const Quaternion u = random_unit(rng);
    const SimilaritySphere a = csim(q);
    const SimilaritySphere b = csim(similar(q, u));
    CHECK(std::fabs(a.a - b.a) <= 1e-12);
    CHECK(std::fabs(a.b - b.b) <= 1e-12);
  }
}

TEST_CASE("rotation_between maps one unit imaginary onto another") {
  Rng rng = make_rng(5, "rotation");
  for (int t = 0; t < 100; ++t) {
    const Quaternion v1 = random_unit_imaginary(rng);
    const Quaternion v2 = random_unit_imaginary(rng);
    const Quaternion r = rotation_between(v1, v2);
    CHECK(std::fabs(abs(r) - 1.0) <= 1e-14);
    // r v1 conj(r) = v2
    CHECK(qdist(r * v1 * conj(r), v2) <= 1e-12);
  }
  // Antiparallel and identical inputs.
  CHECK(qdist(rotation_between(I, -I) * I * conj(rotation_between(I, -I)), -I) <= 1e-14);
  CHECK(qdist(rotation_between(J, J), Quaternion{1.0}) <= 1e-15);
}

TEST_CASE("inner product examples") {
  const QVector e1{Quaternion{1.0}, Quaternion{}};
  const QVector e2{Quaternion{}, Quaternion{1.0}};
  CHECK(inner(e1, e2) == Quaternion{});
  const QVector x{I};
  const QVector y{J};
  CHECK(inner(x, y) == K);
  const double h = 1.0 / std::sqrt(2.0);
  const QVector u{Quaternion{h}, I * h};
  CHECK(qdist(inner(u, u), Quaternion{1.0}) <= 1e-15);
  CHECK_THROWS_AS(inner(e1, QVector{I}), DimensionError);
}

TEST_CASE("inner product agrees with the oracle and is right-linear") {
  Rng rng = make_rng(3, "inner");
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    const QVector x = random_unit_vector(n, rng);
    const QVector y = scale_right(random_unit_vector(n, rng), Quaternion{0.7});
    const Quaternion q{g(rng), g(rng), g(rng), g(rng)};
    CHECK(qdist(inner(x, y), testing::from_q(oracle::inner(to_q(x), to_q(y)))) <= 1e-14);
    CHECK(qdist(inner(scale_right(x, q), y), inner(x, y) * q) <= 1e-13 * (1 + abs(q)));
    CHECK(qdist(inner(x, scale_right(y, q)), conj(q) * inner(x, y)) <= 1e-13 * (1 + abs(q)));
    CHECK(abs(inner(x, y)) <= norm(x) * norm(y) + 1e-15);
    const Quaternion xx = inner(x, x);
    CHECK(std::fabs(xx.x) + std::fabs(xx.y) + std::fabs(xx.z) <= 1e-15);
    CHECK(xx.w > 0.0);
  }
}

TEST_CASE("sparse vectors match their dense form") {
  const SparseVector a({{0, Quaternion{1, 2, 0, 0}}, {5, J}});
  const SparseVector b({{5, K}, {7, Quaternion{3.0}}});
  CHECK(a.extent() == 6);
  CHECK(a.min_index() == 0);
  CHECK(a.at(5) == J);
  CHECK(a.at(3) == Quaternion{});
  const QVector da = a.to_dense(8);
  const QVector db = b.to_dense(8);
  CHECK(inner(a, b) == inner(da, db));
  CHECK((a + b).to_dense(8) == add(da, db));
  CHECK(a.norm() == doctest::Approx(norm(da)));
  CHECK_THROWS_AS(SparseVector({{1, I}, {1, J}}), DomainError);
}

TEST_CASE("polarization examples") {
  Rng rng = make_rng(1, "pol.examples");
  const QVector x = random_unit_vector(3, rng);
  CHECK(qdist(polarization(QMatrix::identity(3), x, x), Quaternion{1.0}) <= 1e-14);
  const QVector y = random_unit_vector(3, rng);
  CHECK(abs(polarization(QMatrix(3), x, y)) == 0.0);
  CHECK_THROWS_AS(polarization(QMatrix(2), x, y), DimensionError);
}

TEST_CASE("polarization reproduces <Tx, y>") {
  Rng rng = make_rng(2, "pol.random");
  std::uniform_real_distribution<double> scale(0.0, 10.0);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
    QMatrix m = random_matrix(n, rng);
    m = (scale(rng) / std::max(frobenius(m), 1e-300)) * m;
    const QVector x = random_unit_vector(n, rng);
    const QVector y = random_unit_vector(n, rng);
    worst = std::max(worst, abs(polarization(m, x, y) - inner(qnr::apply(m, x), y)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("quaternion literals") {
  CHECK(parse_quaternion("[1, -2.5, 0, 3e2]") == Quaternion{1, -2.5, 0, 300});
  CHECK(parse_quaternion("  [0,0,0,1] ") == K);
  CHECK_THROWS_AS(parse_quaternion("[1, 2, 3]"), ParseError);
  CHECK_THROWS_AS(parse_quaternion("1, 2, 3, 4"), ParseError);
  CHECK_THROWS_AS(parse_quaternion("[1, 2, 3, 4] x"), ParseError);
  CHECK_THROWS_AS(parse_quaternion("[1, a, 3, 4]"), ParseError);
  const Quaternion q{0.1, -1.0 / 3.0, 1e-300, 12345.678};
  CHECK(parse_quaternion(format_quaternion(q)) == q);
}
