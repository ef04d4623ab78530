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
#include <cmath>
#include <random>
#include <string>
#include <string_view>

namespace qnr {

/// Real quaternion q = w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double operator[](int c) const {
    return c == 0 ? w : c == 1 ? x : c == 2 ? y : z;
  }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double re(const Quaternion& q) { return q.w; }
constexpr Quaternion im(const Quaternion& q) { return {0.0, q.x, q.y, q.z}; }
constexpr double norm2(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }
inline double abs_im(const Quaternion& q) { return std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z); }

inline Quaternion inverse(const Quaternion& q) { return conj(q) / norm2(q); }

/// conj(u) q u for a unit u; stays in the similarity class of q.
constexpr Quaternion similar(const Quaternion& q, const Quaternion& u) { return conj(u) * q * u; }

/// Similarity class [q] = {a + b u : u unit imaginary}, stored by its
/// canonical complex representative a + b i with b >= 0.
struct SimilaritySphere {
  double a = 0.0;
  double b = 0.0;

  Quaternion representative() const { return {a, b, 0.0, 0.0}; }
  friend bool operator==(const SimilaritySphere&, const SimilaritySphere&) = default;
};

inline SimilaritySphere csim(const Quaternion& q) { return {q.w, abs_im(q)}; }

inline double distance(const SimilaritySphere& s, const SimilaritySphere& t) {
  return std::hypot(s.a - t.a, s.b - t.b);
}

/// Unit quaternion w with w v1 conj(w) = v2 for unit imaginary v1, v2.
Quaternion rotation_between(const Quaternion& v1, const Quaternion& v2);

/// A quaternion in [q] whose imaginary part points along the unit imaginary
/// `direction`; returns q's real part if q is real.
Quaternion align_imaginary(const SimilaritySphere& s, const Quaternion& direction);

/// Uniform unit imaginary quaternion (normalized Gaussian triple).
template <class Rng>
Quaternion random_unit_imaginary(Rng& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    Quaternion v{0.0, gauss(rng), gauss(rng), gauss(rng)};
    const double n = abs(v);
    if (n > 1e-12) return v / n;
  }
}

/// Uniform unit quaternion (Haar measure on S^3).
template <class Rng>
Quaternion random_unit(Rng& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    Quaternion v{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    const double n = abs(v);
    if (n > 1e-12) return v / n;
  }
}

/// Parses the literal `[w, x, y, z]`. Throws ParseError.
Quaternion parse_quaternion(std::string_view text);

/// Formats as `[w, x, y, z]` with round-trip precision.
std::string format_quaternion(const Quaternion& q);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

}  // namespace qnr
