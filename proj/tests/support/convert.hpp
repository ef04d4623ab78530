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

#include <vector>

#include "oracles.hpp"
#include "qnr/qmatrix.hpp"
#include "qnr/quaternion.hpp"

namespace qnr::testing {

inline oracle::Q to_q(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }
inline Quaternion from_q(const oracle::Q& q) { return {q[0], q[1], q[2], q[3]}; }

inline std::vector<oracle::Q> to_q(const QVector& x) {
  std::vector<oracle::Q> out;
  for (const auto& q : x) out.push_back(to_q(q));
  return out;
}

inline std::vector<std::vector<oracle::Q>> to_q(const QMatrix& t) {
  std::vector<std::vector<oracle::Q>> out(t.size(), std::vector<oracle::Q>(t.size()));
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t.size(); ++c) out[r][c] = to_q(t(r, c));
  return out;
}

inline double qdist(const Quaternion& p, const Quaternion& q) { return abs(p - q); }

}  // namespace qnr::testing
