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

// Private conversion helpers between CMatrix/CVector and Eigen. Eigen is used
// only for validation-side numerics (singular-value rank, least-squares
// oracle); the instrumented algorithm path never touches it.

#pragma once

#include <Eigen/Dense>

#include "qlval/matrix.hpp"

namespace qlval::detail {

inline Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline Eigen::VectorXcd to_eigen(const CVector& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

inline CVector from_eigen(const Eigen::VectorXcd& v) {
  CVector out(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<size_t>(i)] = v(i);
  return out;
}

}  // namespace qlval::detail
