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

#include "qnr/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qnr/error.hpp"

namespace qnr {

namespace {

using json = nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& member(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(where) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

double number(const json& j, const char* where) {
  if (!j.is_number()) throw ParseError(std::string(where) + ": expected a number");
  return j.get<double>();
}

Quaternion quaternion_of(const json& j) {
  if (j.is_string()) return parse_quaternion(j.get<std::string>());
  if (j.is_number()) return Quaternion{j.get<double>()};
  if (j.is_array() && j.size() == 4) {
    Quaternion q;
    q.w = number(j[0], "quaternion");
    q.x = number(j[1], "quaternion");
    q.y = number(j[2], "quaternion");
    q.z = number(j[3], "quaternion");
    return q;
  }
  throw ParseError("quaternion: expected \"[w, x, y, z]\"");
}

std::vector<Quaternion> quaternion_list(const json& j, const char* where) {
  if (!j.is_array()) throw ParseError(std::string(where) + ": expected a list of quaternions");
  std::vector<Quaternion> out;
  for (const auto& e : j) out.push_back(quaternion_of(e));
  return out;
}

QMatrix matrix_of(const json& j) {
  const json& nj = member(j, "n", "matrix");
  if (!nj.is_number_integer() || nj.get<long long>() < 0) {
    throw ParseError("matrix: \"n\" must be a nonnegative integer");
  }
  const auto n = static_cast<std::size_t>(nj.get<long long>());
  const json& rows = member(j, "entries", "matrix");
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError("matrix: \"entries\" must have n rows");
  }
  QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n) {
      throw ParseError("matrix: row " + std::to_string(r) + " must have n entries");
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = quaternion_of(rows[r][c]);
  }
  return m;
}

TailSymbol tail_of(const json& j) {
  const json& kind = member(j, "kind", "tail");
  if (!kind.is_string()) throw ParseError("tail: \"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "constant") return TailSymbol::constant(quaternion_of(member(j, "value", "tail")));
    if (k == "periodic") return TailSymbol::periodic(quaternion_list(member(j, "values", "tail"), "tail"));
    if (k == "rationals_i") {
      return TailSymbol::rationals(j.contains("radius") ? number(j.at("radius"), "tail") : 0.5);
    }
    if (k == "explicit") {
      return TailSymbol::explicit_list(quaternion_list(member(j, "values", "tail"), "tail"),
                                       quaternion_of(member(j, "fill", "tail")));
    }
    if (k == "harmonic") return TailSymbol::harmonic(quaternion_of(member(j, "value", "tail")));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("tail: unknown kind \"" + k + "\"");
}

LimitEntry limit_of(const json& j) {
  const double a = number(member(j, "a", "limit_set"), "limit_set");
  if (j.contains("b")) return LimitEntry::sphere(a, number(j.at("b"), "limit_set"));
  return LimitEntry::segment(a, number(member(j, "b0", "limit_set"), "limit_set"),
                             number(member(j, "b1", "limit_set"), "limit_set"));
}

}  // namespace

QMatrix parse_matrix(std::string_view json_text) { return matrix_of(parse_json(json_text)); }

OperatorFile parse_operator(std::string_view json_text) {
  const json j = parse_json(json_text);
  const QMatrix block = j.contains("block") ? matrix_of(j.at("block")) : QMatrix(0);
  const TailSymbol tail = tail_of(member(j, "tail", "operator"));
  const json& limits = member(j, "limit_set", "operator");
  if (!limits.is_array()) throw ParseError("operator: \"limit_set\" must be a list");
  std::vector<LimitEntry> entries;
  for (const auto& e : limits) entries.push_back(limit_of(e));
  const double bound = number(member(j, "bound", "operator"), "operator");
  std::optional<Polygon> reference;
  if (j.contains("closure_reference")) {
    std::vector<Point2> pts;
    for (const auto& p : j.at("closure_reference")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("closure_reference: expected [a, b] pairs");
      pts.push_back({number(p[0], "closure_reference"), number(p[1], "closure_reference")});
    }
    reference = convex_hull(pts);
  }
  std::size_t n_check = 100000;
  if (j.contains("n_check")) {
    if (!j.at("n_check").is_number_integer()) throw ParseError("operator: \"n_check\" must be an integer");
    n_check = j.at("n_check").get<std::size_t>();
  }
  try {
    return {ModelOperator(block, tail, std::move(entries), bound), std::move(reference), n_check};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::variant<QMatrix, OperatorFile> parse_input(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (j.is_object() && j.contains("tail")) return parse_operator(json_text);
  return matrix_of(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string matrix_to_json(const QMatrix& m) {
  std::string out = "{\"n\": " + std::to_string(m.size()) + ", \"entries\": [";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (c) out += ", ";
      out += "\"" + format_quaternion(m(r, c)) + "\"";
    }
    out += "]";
  }
  return out + "]}";
}

}  // namespace qnr
