// Copyright 2026 The g2mono Authors
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

// Shared matrix text format:
//   {"rows": n, "cols": m, "entries": [["p/q", ...], ...]}
// Rationals are reduced strings so no consumer coerces them to floats.

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "g2mono/exact/matrix.hpp"
#include "g2mono/exact/polynomial.hpp"
#include "g2mono/exact/rational.hpp"

namespace g2mono {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

inline Json vector_to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_to_json(r));
  return out;
}

inline Json matrix_to_json(const RationalMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(vector_to_json(m.row(i)));
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

inline RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix JSON needs rows, cols and entries");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& e = j.at("entries");
  if (!e.is_array() || e.size() != rows) throw ParseError("entries must hold " + std::to_string(rows) + " rows");
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != cols)
      throw ParseError("each row must hold " + std::to_string(cols) + " entries");
    for (const auto& v : row) data.push_back(rational_from_json(v));
  }
  return RationalMatrix(rows, cols, std::move(data));
}

inline Json polynomial_to_json(const RationalPolynomial& p) {
  Json out;
  out["coefficients"] = vector_to_json(p.coefficients());
  out["text"] = p.to_string();
  return out;
}

}  // namespace g2mono
