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

#include "qlval/valuation.hpp"

namespace qlval {

namespace {

// Lattice elements compare equal within ten times the entrywise tolerance.
bool lattice_equal(const CMatrix& a, const CMatrix& b, const Tolerances& tol) {
  return a.approx_equal(b, 10.0 * tol.eps_tol);
}

TruthVerdict membership_verdict(const Projector& p, const StateVector& psi,
                                Semantics semantics, const SolveOptions& opts) {
  const StatementVerdict vx = range_membership(p, psi, opts);
  const StatementVerdict vy = kernel_membership(p, psi, opts);
  if (vx.holds && vy.holds)
    throw PreconditionViolated(
        "valuation: range and kernel membership cannot both hold for a unit state");

  TruthVerdict v;
  v.semantics = semantics;
  v.first = vx.holds;
  v.second = vy.holds;
  v.work_first = vx.work;
  v.work_second = vy.work;
  if (semantics == Semantics::BvN) {
    v.value = vx.holds ? TruthValue::True : TruthValue::False;
  } else {
    if (vx.holds) v.value = TruthValue::True;
    else if (vy.holds) v.value = TruthValue::False;
    else v.value = TruthValue::Gap;
  }
  return v;
}

TruthVerdict comparability_verdict(const PropositionPair& pair, Semantics semantics,
                                   const Tolerances& tol) {
  const bool z = subspace_leq(pair.q, pair.p, tol) || subspace_leq(pair.p, pair.q, tol);
  const bool w = orthogonal(pair.q, pair.p, tol);
  if (z && w)
    throw PreconditionViolated(
        "comparability: inclusion and orthogonality cannot both hold for distinct "
        "nonzero propositions");

  TruthVerdict v;
  v.semantics = semantics;
  v.first = z;
  v.second = w;
  if (semantics == Semantics::BvN) {
    v.value = z ? TruthValue::True : TruthValue::False;
  } else {
    if (z) v.value = TruthValue::True;
    else if (w) v.value = TruthValue::False;
    else v.value = TruthValue::Gap;
  }
  return v;
}

}  // namespace

PropositionPair make_proposition_pair(const Projector& q, const Projector& p,
                                      const Tolerances& tol) {
  if (q.dim != p.dim)
    throw DimensionMismatch("proposition pair: dimension mismatch");
  if (q.rank == 0 || p.rank == 0)
    throw ZeroProjector("proposition pair: operators must be nonzero");
  if (lattice_equal(q.matrix, p.matrix, tol))
    throw PreconditionViolated("proposition pair: operators must be distinct");
  return PropositionPair{q, p};
}

TruthVerdict valuate_partial(const Projector& p, const StateVector& psi,
                             const SolveOptions& opts) {
  return membership_verdict(p, psi, Semantics::Partial, opts);
}

TruthVerdict valuate_bvn(const Projector& p, const StateVector& psi,
                         const SolveOptions& opts) {
  return membership_verdict(p, psi, Semantics::BvN, opts);
}

TruthVerdict comparability_partial(const PropositionPair& pair, const Tolerances& tol) {
  return comparability_verdict(pair, Semantics::Partial, tol);
}

TruthVerdict comparability_bvn(const PropositionPair& pair, const Tolerances& tol) {
  return comparability_verdict(pair, Semantics::BvN, tol);
}

Projector meet(const Projector& a, const Projector& b, const Tolerances& tol) {
  if (a.dim != b.dim) throw DimensionMismatch("meet: dimension mismatch");
  const CMatrix stacked = vstack(CMatrix::identity(a.dim) - a.matrix,
                                 CMatrix::identity(b.dim) - b.matrix);
  const CMatrix basis = nullspace_basis(stacked, tol.eps_rank);
  if (basis.cols() == 0) {
    Projector zero;
    zero.dim = a.dim;
    zero.matrix = CMatrix(a.dim, a.dim);
    zero.rank = 0;
    zero.nullity = a.dim;
    return zero;
  }
  // The basis is orthonormal, so B B-adjoint is the intersection projector;
  // revalidation cross-checks the greedy rank against the singular values.
  return projector_from_matrix(basis * basis.adjoint(), tol);
}

Projector join(const Projector& a, const Projector& b, const Tolerances& tol) {
  return complement(meet(complement(a), complement(b), tol));
}

DistributivityReport distributivity_witness(const Projector& q, const Projector& p1,
                                            const Projector& p2, const Tolerances& tol) {
  if (q.dim != 2 || p1.dim != 2 || p2.dim != 2)
    throw PreconditionViolated("distributivity_witness: dimension must be 2");
  if (q.rank != 1)
    throw PreconditionViolated("distributivity_witness: q must be rank-one");
  if (p1.rank != 1 || p2.rank != 1)
    throw PreconditionViolated("distributivity_witness: p1 and p2 must be rank-one");
  if (!orthogonal(p1, p2, tol))
    throw PreconditionViolated("distributivity_witness: p1 and p2 must be orthogonal");

  DistributivityReport r;
  r.lhs = join(meet(q, p1, tol), meet(q, p2, tol), tol);
  r.rhs = meet(q, join(p1, p2, tol), tol);
  r.distributive = lattice_equal(r.lhs.matrix, r.rhs.matrix, tol);
  return r;
}

}  // namespace qlval
