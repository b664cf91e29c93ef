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

// Wire formats. A state is {"dim": n, "data": [[re, im], ...]} with exactly
// n entries; a matrix is {"rows": r, "cols": c, "data": [[[re, im], ...]]}
// with r rows of c entries. Field names are fixed; parsers reject missing
// fields, unknown fields, and any size that disagrees with the declared
// dimensions.

#pragma once

#include <string>

#include "json.hpp"
#include "qlval/linalg.hpp"
#include "qlval/opcount.hpp"

namespace qlval {

/** Read and parse a JSON file; throws ParseError on I/O or syntax failure. */
nlohmann::json load_json_file(const std::string& path);

StateVector parse_state(const nlohmann::json& j, const Tolerances& tol = {});

CMatrix parse_matrix(const nlohmann::json& j);

nlohmann::json state_to_json(const StateVector& s);

nlohmann::json matrix_to_json(const CMatrix& m);

/** {"mul", "div", "add", "cmp", "total"} with the weighted total. */
nlohmann::json ops_to_json(const OpCounter& c, const OpWeights& w = {});

}  // namespace qlval
