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

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qnr/geometry.hpp"
#include "qnr/model_operator.hpp"
#include "qnr/qmatrix.hpp"

namespace qnr {

// Matrix files: {"n": 2, "entries": [[q, q], [q, q]]} where each q is the
// literal "[w, x, y, z]" (as a string or as a JSON array of four numbers).
//
// Operator files:
//   {"block": <matrix>, "tail": {"kind": ..., ...}, "limit_set": [...],
//    "bound": 1.0, "closure_reference": [[a, b], ...], "n_check": 100000}
// with tail kinds
//   {"kind": "constant", "value": q}
//   {"kind": "periodic", "values": [q, ...]}
//   {"kind": "rationals_i", "radius": 0.5}
//   {"kind": "explicit", "values": [q, ...], "fill": q}
//   {"kind": "harmonic", "value": q}
// and limit entries {"a": 0, "b": 1} (sphere) or {"a": 0, "b0": 0, "b1": 0.5}
// (segment). All parse failures throw ParseError.

struct OperatorFile {
  ModelOperator op;
  /// Optional expected closure of the upper bild, used for reporting only.
  std::optional<Polygon> closure_reference;
  std::size_t n_check = 100000;
};

QMatrix parse_matrix(std::string_view json_text);
OperatorFile parse_operator(std::string_view json_text);

/// Operator files are recognised by a "tail" member.
std::variant<QMatrix, OperatorFile> parse_input(std::string_view json_text);

std::string read_file(const std::string& path);

std::string matrix_to_json(const QMatrix& m);

}  // namespace qnr
