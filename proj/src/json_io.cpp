// Copyright 2026 The qlval Authors
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

#include "qlval/json_io.hpp"

#include <cmath>
#include <fstream>

namespace qlval {

namespace {

using nlohmann::json;

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const char* what) {
  if (!j.is_object())
    throw ParseError(std::string(what) + ": expected a JSON object");
  for (const char* k : keys)
    if (!j.contains(k))
      throw ParseError(std::string(what) + ": missing field '" + k + "'");
  if (j.size() != keys.size())
    throw ParseError(std::string(what) + ": unknown extra fields present");
}

int parse_dim_field(const json& j, const char* key, const char* what) {
  const json& f = j.at(key);
  if (!f.is_number_integer() || f.get<long long>() < 0)
    throw ParseError(std::string(what) + ": field '" + key +
                     "' must be a non-negative integer");
  return f.get<int>();
}

Complex parse_complex(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(std::string(what) + ": entries must be [re, im] number pairs");
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    throw ParseError(std::string(what) + ": entries must be finite");
  return Complex(re, im);
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

StateVector parse_state(const nlohmann::json& j, const Tolerances& tol) {
  require_keys(j, {"dim", "data"}, "state");
  const int dim = parse_dim_field(j, "dim", "state");
  const json& data = j.at("data");
  if (!data.is_array() || static_cast<int>(data.size()) != dim)
    throw ParseError("state: data length must equal dim");
  CVector v;
  v.reserve(data.size());
  for (const json& e : data) v.push_back(parse_complex(e, "state"));
  return make_state(v, tol);
}

CMatrix parse_matrix(const nlohmann::json& j) {
  require_keys(j, {"rows", "cols", "data"}, "matrix");
  const int rows = parse_dim_field(j, "rows", "matrix");
  const int cols = parse_dim_field(j, "cols", "matrix");
  const json& data = j.at("data");
  if (!data.is_array() || static_cast<int>(data.size()) != rows)
    throw ParseError("matrix: data must hold exactly 'rows' rows");
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = data[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError("matrix: every row must hold exactly 'cols' entries");
    for (int k = 0; k < cols; ++k)
      m(i, k) = parse_complex(row[static_cast<size_t>(k)], "matrix");
  }
  return m;
}

nlohmann::json state_to_json(const StateVector& s) {
  json data = json::array();
  for (const Complex& z : s.amplitudes) data.push_back(complex_to_json(z));
  return json{{"dim", s.dim}, {"data", data}};
}

nlohmann::json matrix_to_json(const CMatrix& m) {
  json data = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    data.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

nlohmann::json ops_to_json(const OpCounter& c, const OpWeights& w) {
  return json{{"mul", c.mul}, {"div", c.div}, {"add", c.add},
              {"cmp", c.cmp}, {"total", c.total(w)}};
}

}  // namespace qlval
