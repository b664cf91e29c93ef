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

#pragma once

#include <optional>

#include "qlval/elimination.hpp"
#include "qlval/linalg.hpp"
#include "qlval/opcount.hpp"

namespace qlval {

enum class Statement {
  X_RangeMembership,   // the state lies in the proposition's range
  Y_KernelMembership,  // the state lies in the proposition's kernel
};

/**
 * Outcome of one membership decision, with the work the decision procedure
 * actually performed. When holds is true and a witness is attached, the
 * witness solves the membership system to residual 1e-8 in max norm.
 */
struct StatementVerdict {
  bool holds = false;
  Statement statement = Statement::X_RangeMembership;
  OpCounter work;
  std::optional<CVector> witness;
};

struct SolveOptions {
  bool pivoting = true;
  bool early_exit = false;        // stop once the active block is all zero
  double eps_tol = 1e-9;          // entrywise comparisons and pivot tests
  double eps_rank = 1e-9;         // kernel-column selection threshold
  double eps_consistency = 1e-8;  // final-cell test, relative to tableau scale
  EliminationBackend backend = EliminationBackend::Auto;
};

/**
 * Range membership for a rank-one proposition, decided by the proportionality
 * test psi_pi * M(j,pi) == psi_j * M(pi,pi) over all j != pi, where pi indexes
 * the largest-magnitude diagonal entry (for a rank-one projector the diagonal
 * maximum is at least 1/n, so pi always exists). All n-1 rows are checked
 * regardless of early failures, so the counted work is always exactly
 * 2(n-1) multiplies plus n-1 comparisons; pivot selection and the reported
 * witness psi_pi / M(pi,pi) cost nothing, like the elimination's row swaps.
 *
 * Throws RankUnsupported unless p has rank one, DimensionMismatch on shape
 * disagreement.
 */
StatementVerdict range_membership(const Projector& p, const StateVector& psi,
                                  const SolveOptions& opts = {});

/**
 * Assemble the augmented kernel tableau for K X = Psi: the n-1 greedily
 * selected independent kernel columns, then the state amplitudes as the last
 * column. For a generic rank-one projector the selected columns are exactly
 * the first n-1 columns of I - M.
 */
AugmentedTableau build_kernel_tableau(const Projector& p, const StateVector& psi,
                                      const SolveOptions& opts = {});

/**
 * Kernel membership for a rank-one proposition: run all n-1 elimination
 * steps (fewer when early_exit fires on an all-zero active block) and test
 * the only cell the procedure can leave nonzero, the bottom-right one,
 * against eps_consistency relative to the tableau's construction-time scale.
 * That final test is counted as one comparison on top of the elimination's
 * own counters. ZeroPivot propagates, which with pivoting enabled cannot
 * happen for a valid rank-one kernel system.
 */
StatementVerdict kernel_membership(const Projector& p, const StateVector& psi,
                                   const SolveOptions& opts = {});

/**
 * Ground-truth consistency oracle: holds iff the least-squares residual
 * min_X ||a X - b||_2 is within eps_consistency * ||b||_2. Backed by a
 * singular-value decomposition and deliberately independent of the
 * instrumented membership path; its work counter stays empty.
 */
StatementVerdict solve_consistency(const CMatrix& a, const CVector& b,
                                   Statement statement = Statement::X_RangeMembership,
                                   double eps_consistency = 1e-8);

}  // namespace qlval
