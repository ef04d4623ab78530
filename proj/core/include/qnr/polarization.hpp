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

#include "qnr/qmatrix.hpp"

namespace qnr {

/// Recovers <T x, y> from eight quadratic values Q(v) = <T v, v>:
///
///   4 <Tx, y> = Q(x+y) - Q(x-y) + (Q(x+yi) - Q(x-yi)) i
///             + k (Q(x+yk) - Q(x-yk)) + k (Q(x+yj) - Q(x-yj)) i
///
/// and returns the right-hand side divided by 4.
Quaternion polarization(const QMatrix& t, std::span<const Quaternion> x,
                        std::span<const Quaternion> y);

}  // namespace qnr
