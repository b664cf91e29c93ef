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

#include "qlval/solvability.hpp"

#include <Eigen/SVD>

#include "eigen_bridge.hpp"

namespace qlval {

namespace {

void require_rank_one(const Projector& p, const char* where) {
  if (p.rank != 1)
    throw RankUnsupported(std::string(where) + ": proposition must have rank one");
}

void require_same_dim(const Projector& p, const StateVector& psi, const char* where) {
  if (p.dim != psi.dim)
    throw DimensionMismatch(std::string(where) + ": projector and state dimensions differ");
}

}  // namespace

StatementVerdict range_membership(const Projector& p, const StateVector& psi,
                                  const SolveOptions& opts) {
  require_same_dim(p, psi, "range_membership");
  require_rank_one(p, "range_membership");
  const int n = p.dim;

  int pi = 0;
  for (int j = 1; j < n; ++j)
    if (std::abs(p.matrix(j, j)) > std::abs(p.matrix(pi, pi))) pi = j;

  StatementVerdict v;
  v.statement = Statement::X_RangeMembership;
  bool holds = true;
  const Complex psi_pi = psi.amplitudes[static_cast<size_t>(pi)];
  const Complex m_pipi = p.matrix(pi, pi);
  for (int j = 0; j < n; ++j) {
    if (j == pi) continue;
    const Complex lhs = psi_pi * p.matrix(j, pi);
    const Complex rhs = psi.amplitudes[static_cast<size_t>(j)] * m_pipi;
    v.work.mul += 2;
    v.work.cmp += 1;
    if (std::abs(lhs - rhs) > opts.eps_tol) holds = false;
  }
  v.holds = holds;
  if (holds) v.witness = CVector{psi_pi / m_pipi};
  return v;
}

AugmentedTableau build_kernel_tableau(const Projector& p, const StateVector& psi,
                                      const SolveOptions& opts) {
  require_same_dim(p, psi, "kernel_membership");
  require_rank_one(p, "kernel_membership");
  const int n = p.dim;

  Tolerances tol;
  tol.eps_rank = opts.eps_rank;
  const SubspaceBasis kb = kernel_basis(p, tol);
  if (kb.columns.cols() != n - 1)
    throw RankUnsupported("kernel_membership: kernel column count does not match nullity");

  CVector cells(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n - 1; ++l)
      cells[static_cast<size_t>(j) * n + static_cast<size_t>(l)] = kb.columns(j, l);
    cells[static_cast<size_t>(j) * n + static_cast<size_t>(n - 1)] =
        psi.amplitudes[static_cast<size_t>(j)];
  }
  return make_tableau(n, std::move(cells));
}

StatementVerdict kernel_membership(const Projector& p, const StateVector& psi,
                                   const SolveOptions& opts) {
  AugmentedTableau t = build_kernel_tableau(p, psi, opts);
  const int n = t.dim;

  EliminationOptions elim;
  elim.pivoting = opts.pivoting;
  elim.eps_tol = opts.eps_tol;
  elim.backend = opts.backend;
  while (t.iteration < n - 1) {
    if (opts.early_exit && active_block_zero(t, opts.eps_tol)) break;
    t = eliminate_step(std::move(t), elim);
  }

  StatementVerdict v;
  v.statement = Statement::Y_KernelMembership;
  t.ops.cmp += 1;  // the final consistency test
  v.holds = std::abs(t.at(n - 1, n - 1)) <= opts.eps_consistency * t.scale;
  v.work = t.ops;
  return v;
}

StatementVerdict solve_consistency(const CMatrix& a, const CVector& b,
                                   Statement statement, double eps_consistency) {
  if (a.rows() != static_cast<int>(b.size()))
    throw DimensionMismatch("solve_consistency: row count must match right-hand side");

  StatementVerdict v;
  v.statement = statement;
  const double b_norm = norm2(b);

  if (a.cols() == 0) {
    // No unknowns: the system is consistent only for a zero right-hand side.
    v.holds = (b_norm == 0.0);
    if (v.holds) v.witness = CVector{};
    return v;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(a),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXcd x = svd.solve(detail::to_eigen(b));
  const double residual = (detail::to_eigen(a) * x - detail::to_eigen(b)).norm();
  v.holds = residual <= eps_consistency * b_norm;
  if (v.holds) v.witness = detail::from_eigen(x);
  return v;
}

}  // namespace qlval
