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

#include <vector>

#include "qlval/matrix.hpp"

namespace qlval {

/**
 * Numerical comparison thresholds used across the library.
 *
 * eps_tol  : absolute threshold for entrywise (max-norm) comparisons.
 * eps_rank : independence threshold for rank decisions, relative to the
 *            largest column norm of the matrix under inspection.
 * eps_norm : slack for unit-norm state validation.
 */
struct Tolerances {
  double eps_tol = 1e-9;
  double eps_rank = 1e-9;
  double eps_norm = 1e-12;
};

/** Unit vector in C^n, n >= 2. Construct through make_state. */
struct StateVector {
  int dim = 0;
  CVector amplitudes;
};

/**
 * Hermitian idempotent operator on C^n with cached rank and nullity
 * (rank + nullity == n). The zero projector (rank 0) is a valid value here;
 * contexts that require nonzero propositions enforce that themselves.
 */
struct Projector {
  int dim = 0;
  CMatrix matrix;
  int rank = 0;
  int nullity = 0;
};

enum class SubspaceKind {
  Range,   // columns drawn from the operator itself
  Kernel,  // columns drawn from its complement
};

/**
 * Raw independent columns spanning a projector's range or kernel.
 * Columns are the operator's own columns (not orthonormalized), selected
 * greedily left to right; source_columns records where each came from.
 */
struct SubspaceBasis {
  SubspaceKind kind = SubspaceKind::Range;
  int dim = 0;
  CMatrix columns;
  std::vector<int> source_columns;
};

/**
 * Validate and normalize a state vector.
 * Throws DimensionTooSmall for dim < 2, ZeroVector when the norm is below
 * tol.eps_norm, ParseError on non-finite entries.
 */
StateVector make_state(const CVector& amplitudes, const Tolerances& tol = {});

/** Rank-one projector |psi><psi|. */
Projector projector_from_state(const StateVector& psi);

/**
 * Validate an arbitrary matrix as a projector.
 * Throws NotHermitian / NotIdempotent when the defining identities fail at
 * tol.eps_tol; rank is the number of singular values above
 * tol.eps_rank * sigma_max.
 */
Projector projector_from_matrix(const CMatrix& m, const Tolerances& tol = {});

/** Complement projector I - P (swaps rank and nullity). */
Projector complement(const Projector& p);

/** Independent columns of P spanning ran(P); column count equals rank. */
SubspaceBasis range_basis(const Projector& p, const Tolerances& tol = {});

/** Independent columns of I - P spanning ker(P); column count equals nullity. */
SubspaceBasis kernel_basis(const Projector& p, const Tolerances& tol = {});

/** Commutation test: ||QP - PQ||_max <= tol.eps_tol. */
bool commutes(const Projector& q, const Projector& p, const Tolerances& tol = {});

/** Orthogonality test: both ||QP||_max and ||PQ||_max within tol.eps_tol. */
bool orthogonal(const Projector& q, const Projector& p, const Tolerances& tol = {});

/** Subspace order ran(Q) <= ran(P), decided through ||PQ - Q||_max. */
bool subspace_leq(const Projector& q, const Projector& p, const Tolerances& tol = {});

/**
 * Greedy modified Gram-Schmidt column selection: walk columns left to right,
 * accept a column when its residual against the already-accepted set exceeds
 * eps_rank times the largest column norm of m.
 */
struct GreedySelection {
  std::vector<int> indices;
  CMatrix orthonormal;  // orthonormalized accepted columns, in selection order
};
GreedySelection greedy_independent_columns(const CMatrix& m, double eps_rank);

/**
 * Orthonormal basis (as columns) of {v : m v = 0}, built from the same greedy
 * rank-revealing pass: orthonormalize the conjugated rows, then keep the
 * standard-basis residuals that survive projection.
 */
CMatrix nullspace_basis(const CMatrix& m, double eps_rank);

}  // namespace qlval
