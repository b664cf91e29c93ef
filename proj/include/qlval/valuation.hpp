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

#include "qlval/linalg.hpp"
#include "qlval/solvability.hpp"

namespace qlval {

enum class TruthValue { True, False, Gap };

/**
 * The two truth-assignment schemes. BvN totalizes: a proposition whose
 * range statement fails is simply false, so no proposition is ever without
 * a truth value. Partial leaves a gap when both underlying statements fail.
 */
enum class Semantics { BvN, Partial };

/**
 * A truth assignment together with the pair of underlying statement values
 * it was derived from: (x, y) for membership valuations, (z, w) for
 * comparability. BvN verdicts are never Gap; Partial verdicts are Gap
 * exactly when both underlying statements are false.
 */
struct TruthVerdict {
  TruthValue value = TruthValue::Gap;
  Semantics semantics = Semantics::Partial;
  bool first = false;   // [[x]] or [[z]]
  bool second = false;  // [[y]] or [[w]]
  OpCounter work_first;
  OpCounter work_second;
};

/** Two distinct nonzero propositions; construct through make_proposition_pair. */
struct PropositionPair {
  Projector q;
  Projector p;
};

/**
 * Validate a comparability pair. Throws ZeroProjector when either operator
 * is zero and PreconditionViolated when the two coincide (within 10x the
 * entrywise tolerance, the repo-wide lattice equality margin).
 */
PropositionPair make_proposition_pair(const Projector& q, const Projector& p,
                                      const Tolerances& tol = {});

/**
 * Partial-Boolean valuation of a rank-one proposition against a state:
 * True when the range statement holds, False when the kernel statement
 * holds, Gap when both fail. The two can never hold together for a unit
 * state; that impossibility is enforced as an internal consistency check.
 */
TruthVerdict valuate_partial(const Projector& p, const StateVector& psi,
                             const SolveOptions& opts = {});

/** BvN valuation: True exactly when the range statement holds, else False. */
TruthVerdict valuate_bvn(const Projector& p, const StateVector& psi,
                         const SolveOptions& opts = {});

/**
 * Comparability of a proposition pair under Partial semantics: True when
 * either inclusion holds (z), False when the two are orthogonal (w), Gap
 * when neither. z and w cannot both hold for distinct nonzero propositions.
 */
TruthVerdict comparability_partial(const PropositionPair& pair,
                                   const Tolerances& tol = {});

/** BvN comparability: True exactly when either inclusion holds, else False. */
TruthVerdict comparability_bvn(const PropositionPair& pair,
                               const Tolerances& tol = {});

/**
 * Projector onto the intersection of the two ranges (the common +1
 * eigenspace), computed from the nullspace of the stacked complements
 * [(I - A); (I - B)] via the rank-revealing elimination.
 */
Projector meet(const Projector& a, const Projector& b, const Tolerances& tol = {});

/** Dual of meet: join(A, B) = I - meet(I - A, I - B). */
Projector join(const Projector& a, const Projector& b, const Tolerances& tol = {});

/**
 * Distributivity probe for a qubit triple. Compares
 *   lhs = join(meet(q, p1), meet(q, p2))  against  rhs = meet(q, join(p1, p2))
 * with lattice equality at 10x the entrywise tolerance.
 *
 * Preconditions (PreconditionViolated names the failed one): dimension 2
 * throughout, q rank-one, p1 and p2 rank-one and mutually orthogonal.
 */
struct DistributivityReport {
  Projector lhs;
  Projector rhs;
  bool distributive = false;
};
DistributivityReport distributivity_witness(const Projector& q, const Projector& p1,
                                            const Projector& p2,
                                            const Tolerances& tol = {});

}  // namespace qlval
