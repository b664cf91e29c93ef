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

#include "qlval/linalg.hpp"

#include <Eigen/SVD>

#include "eigen_bridge.hpp"

namespace qlval {

StateVector make_state(const CVector& amplitudes, const Tolerances& tol) {
  if (!all_finite(amplitudes)) throw ParseError("state has non-finite amplitudes");
  if (amplitudes.size() < 2)
    throw DimensionTooSmall("state dimension must be at least 2");
  const double n = norm2(amplitudes);
  if (n < tol.eps_norm) throw ZeroVector("state vector has (near-)zero norm");
  StateVector s;
  s.dim = static_cast<int>(amplitudes.size());
  s.amplitudes = amplitudes;
  for (Complex& z : s.amplitudes) z /= n;
  return s;
}

Projector projector_from_state(const StateVector& psi) {
  Projector p;
  p.dim = psi.dim;
  p.matrix = outer(psi.amplitudes);
  p.rank = 1;
  p.nullity = psi.dim - 1;
  return p;
}

Projector projector_from_matrix(const CMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw DimensionMismatch("projector must be square");
  if (m.rows() < 2) throw DimensionTooSmall("projector dimension must be at least 2");
  if (!all_finite(m.data())) throw ParseError("projector has non-finite entries");
  if (!m.approx_equal(m.adjoint(), tol.eps_tol))
    throw NotHermitian("matrix is not Hermitian within tolerance");
  if (!(m * m).approx_equal(m, tol.eps_tol))
    throw NotIdempotent("matrix is not idempotent within tolerance");

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(m));
  const auto& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol.eps_rank * largest && sv(i) > 0.0) ++rank;

  Projector p;
  p.dim = m.rows();
  p.matrix = m;
  p.rank = rank;
  p.nullity = m.rows() - rank;
  return p;
}

Projector complement(const Projector& p) {
  Projector c;
  c.dim = p.dim;
  c.matrix = CMatrix::identity(p.dim) - p.matrix;
  c.rank = p.nullity;
  c.nullity = p.rank;
  return c;
}

GreedySelection greedy_independent_columns(const CMatrix& m, double eps_rank) {
  double max_col_norm = 0.0;
  for (int j = 0; j < m.cols(); ++j)
    max_col_norm = std::max(max_col_norm, norm2(m.column(j)));
  const double threshold = eps_rank * max_col_norm;

  GreedySelection sel;
  std::vector<CVector> ortho;
  for (int j = 0; j < m.cols(); ++j) {
    CVector v = m.column(j);
    // Two MGS passes keep the accepted set orthonormal to working precision.
    for (int pass = 0; pass < 2; ++pass)
      for (const CVector& u : ortho) {
        const Complex c = inner(u, v);
        for (size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
      }
    const double r = norm2(v);
    if (r > threshold && r > 0.0) {
      for (Complex& z : v) z /= r;
      ortho.push_back(std::move(v));
      sel.indices.push_back(j);
    }
  }

  sel.orthonormal = CMatrix(m.rows(), static_cast<int>(ortho.size()));
  for (size_t k = 0; k < ortho.size(); ++k)
    for (int i = 0; i < m.rows(); ++i)
      sel.orthonormal(i, static_cast<int>(k)) = ortho[k][static_cast<size_t>(i)];
  return sel;
}

namespace {

SubspaceBasis basis_from_columns(const CMatrix& source, SubspaceKind kind,
                                 double eps_rank) {
  GreedySelection sel = greedy_independent_columns(source, eps_rank);
  SubspaceBasis b;
  b.kind = kind;
  b.dim = source.rows();
  b.source_columns = sel.indices;
  b.columns = CMatrix(source.rows(), static_cast<int>(sel.indices.size()));
  for (size_t k = 0; k < sel.indices.size(); ++k) {
    const CVector c = source.column(sel.indices[k]);
    for (int i = 0; i < source.rows(); ++i)
      b.columns(i, static_cast<int>(k)) = c[static_cast<size_t>(i)];
  }
  return b;
}

}  // namespace

SubspaceBasis range_basis(const Projector& p, const Tolerances& tol) {
  return basis_from_columns(p.matrix, SubspaceKind::Range, tol.eps_rank);
}

SubspaceBasis kernel_basis(const Projector& p, const Tolerances& tol) {
  return basis_from_columns(CMatrix::identity(p.dim) - p.matrix,
                            SubspaceKind::Kernel, tol.eps_rank);
}

bool commutes(const Projector& q, const Projector& p, const Tolerances& tol) {
  if (q.dim != p.dim) throw DimensionMismatch("commutes: dimension mismatch");
  return (q.matrix * p.matrix - p.matrix * q.matrix).max_abs() <= tol.eps_tol;
}

bool orthogonal(const Projector& q, const Projector& p, const Tolerances& tol) {
  if (q.dim != p.dim) throw DimensionMismatch("orthogonal: dimension mismatch");
  return (q.matrix * p.matrix).max_abs() <= tol.eps_tol &&
         (p.matrix * q.matrix).max_abs() <= tol.eps_tol;
}

bool subspace_leq(const Projector& q, const Projector& p, const Tolerances& tol) {
  if (q.dim != p.dim) throw DimensionMismatch("subspace_leq: dimension mismatch");
  return (p.matrix * q.matrix - q.matrix).max_abs() <= tol.eps_tol;
}

CMatrix nullspace_basis(const CMatrix& m, double eps_rank) {
  const int n = m.cols();
  // v is in the nullspace iff it is orthogonal to every conjugated row, and
  // the conjugated rows are exactly the columns of the adjoint.
  GreedySelection rows = greedy_independent_columns(m.adjoint(), eps_rank);
  const int rank = static_cast<int>(rows.indices.size());

  std::vector<CVector> row_ortho;
  for (int k = 0; k < rows.orthonormal.cols(); ++k)
    row_ortho.push_back(rows.orthonormal.column(k));

  std::vector<CVector> null_ortho;
  for (int k = 0; k < n && static_cast<int>(null_ortho.size()) < n - rank; ++k) {
    CVector v(static_cast<size_t>(n));
    v[static_cast<size_t>(k)] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const CVector& u : row_ortho) {
        const Complex c = inner(u, v);
        for (size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
      }
      for (const CVector& u : null_ortho) {
        const Complex c = inner(u, v);
        for (size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
      }
    }
    const double r = norm2(v);
    if (r > eps_rank) {
      for (Complex& z : v) z /= r;
      null_ortho.push_back(std::move(v));
    }
  }
  if (static_cast<int>(null_ortho.size()) != n - rank)
    throw PreconditionViolated("nullspace extraction found fewer directions than the rank deficit");

  CMatrix out(n, n - rank);
  for (size_t k = 0; k < null_ortho.size(); ++k)
    for (int i = 0; i < n; ++i)
      out(i, static_cast<int>(k)) = null_ortho[k][static_cast<size_t>(i)];
  return out;
}

}  // namespace qlval
