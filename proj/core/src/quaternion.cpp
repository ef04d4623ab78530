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

#include "qnr/quaternion.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

#include "qnr/error.hpp"

namespace qnr {

Quaternion rotation_between(const Quaternion& v1, const Quaternion& v2) {
  const double dot = v1.x * v2.x + v1.y * v2.y + v1.z * v2.z;
  // v1 x v2
  Quaternion w{1.0 + dot, v1.y * v2.z - v1.z * v2.y, v1.z * v2.x - v1.x * v2.z,
               v1.x * v2.y - v1.y * v2.x};
  double n = abs(w);
  if (n < 1e-9) {
    // Antiparallel: half turn about an axis orthogonal to v1.
    const Quaternion e = std::fabs(v1.x) < 0.9 ? Quaternion::i() : Quaternion::j();
    Quaternion axis{0.0, v1.y * e.z - v1.z * e.y, v1.z * e.x - v1.x * e.z,
                    v1.x * e.y - v1.y * e.x};
    return axis / abs(axis);
  }
  return w / n;
}

Quaternion align_imaginary(const SimilaritySphere& s, const Quaternion& direction) {
  const double n = abs_im(direction);
  if (n == 0.0) return {s.a, s.b, 0.0, 0.0};
  return Quaternion{s.a, 0.0, 0.0, 0.0} + im(direction) * (s.b / n);
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  skip_ws(text, pos);
  if (pos >= text.size() || text[pos] != c) {
    throw ParseError("quaternion literal: expected '" + std::string(1, c) + "' in \"" +
                     std::string(text) + "\"");
  }
  ++pos;
}

double parse_number(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos < text.size() && text[pos] == '+') ++pos;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc{} || !std::isfinite(value)) {
    throw ParseError("quaternion literal: bad number in \"" + std::string(text) + "\"");
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  std::size_t pos = 0;
  std::array<double, 4> c{};
  expect(text, pos, '[');
  for (int n = 0; n < 4; ++n) {
    if (n > 0) expect(text, pos, ',');
    c[n] = parse_number(text, pos);
  }
  expect(text, pos, ']');
  skip_ws(text, pos);
  if (pos != text.size()) {
    throw ParseError("quaternion literal: trailing characters in \"" + std::string(text) + "\"");
  }
  return {c[0], c[1], c[2], c[3]};
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }
  return std::string(buf, ptr);
}

std::string format_quaternion(const Quaternion& q) {
  return "[" + format_double(q.w) + ", " + format_double(q.x) + ", " + format_double(q.y) +
         ", " + format_double(q.z) + "]";
}

}  // namespace qnr
