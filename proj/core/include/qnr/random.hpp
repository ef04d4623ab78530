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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

namespace qnr {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for an independent stream identified by (parent, label, index).
/// Streams for distinct labels never depend on how many other streams exist.
std::uint64_t child_seed(std::uint64_t parent, std::string_view label, std::uint64_t index = 0);

inline Rng make_rng(std::uint64_t parent, std::string_view label, std::uint64_t index = 0) {
  return Rng(child_seed(parent, label, index));
}

/// Runs body(chunk) for chunk in [0, chunks) on a small thread pool. Callers
/// write into per-chunk slots and merge in chunk order, so results do not
/// depend on scheduling. Exceptions from any chunk are rethrown (first chunk
/// index wins).
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& body);

/// Worker count used by parallel_chunks; QNR_THREADS overrides the default.
unsigned worker_count();

}  // namespace qnr
