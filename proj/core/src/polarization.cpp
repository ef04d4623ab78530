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

#include "qnr/polarization.hpp"

#include "qnr/error.hpp"

namespace qnr {

Quaternion polarization(const QMatrix& t, std::span<const Quaternion> x,
                        std::span<const Quaternion> y) {
  if (x.size() != t.size() || y.size() != t.size()) {
    throw DimensionError("polarization: dimension mismatch");
  }
  // Q(x + y eta) - Q(x - y eta)
  auto diff = [&](const Quaternion& eta) {
    const QVector yeta = scale_right(y, eta);
    return quadratic_value(t, add(x, yeta)) - quadratic_value(t, sub(x, yeta));
  };
  const Quaternion i = Quaternion::i();
  const Quaternion j = Quaternion::j();
  const Quaternion k = Quaternion::k();
  const Quaternion rhs = diff(Quaternion{1.0}) + diff(i) * i + k * diff(k) + k * diff(j) * i;
  return rhs * 0.25;
}

}  // namespace qnr
