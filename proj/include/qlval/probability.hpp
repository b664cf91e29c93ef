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

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "qlval/valuation.hpp"

namespace qlval {

/**
 * A maximal test: n rank-one, mutually orthogonal propositions on C^n that
 * sum to the identity. Member k's kernel is the span of all other members'
 * ranges.
 */
struct PropositionFamily {
  int n = 0;
  std::vector<Projector> members;
};

/** Validate family structure; throws InvalidFamily on any violation. */
PropositionFamily make_family(std::vector<Projector> members,
                              const Tolerances& tol = {});

/**
 * What the preparing agent asserts about one family member's statements.
 * The first four assert one membership statement true or false; Superposed
 * asserts that both fail (the state lies strictly between range and kernel).
 */
enum class PrepKind { XTrue, XFalse, YTrue, YFalse, Superposed };

struct Preparation {
  int member = 0;
  PrepKind kind = PrepKind::XTrue;
};

enum class IntervalKind { Point, OpenInterval, ClosedInterval };

/**
 * The tightest probability constraint forced on a member: a Point pins the
 * value to 0 or 1, OpenInterval(0,1) excludes only the endpoints (a gap
 * valuation), ClosedInterval [0,1] is the additivity-only case.
 */
struct ProbabilityVerdict {
  IntervalKind kind = IntervalKind::ClosedInterval;
  double lo = 0.0;
  double hi = 1.0;
};

/**
 * Probability constraint the preparation forces on family member `target`
 * under the given semantics.
 *
 * Under BvN every preparation collapses to a two-valued assertion about its
 * member: true-like preparations (XTrue, YFalse) pin the state class to the
 * member's range, false-like ones (XFalse, YTrue, Superposed) to its kernel,
 * because a failed range statement is indistinguishable from a true kernel
 * statement there. Under Partial the preparation is read literally; only
 * a determinate state class (XTrue, YTrue) or a Superposed assertion about
 * the target itself forces anything beyond additivity.
 */
ProbabilityVerdict forced_probability(const PropositionFamily& family,
                                      const Preparation& prep, int target,
                                      Semantics semantics);

/**
 * True when the per-member forced constraints admit a joint assignment
 * summing to one. Always true for a valid family; exposed so the additivity
 * reasoning is testable on its own.
 */
bool additivity_check(const PropositionFamily& family, const Preparation& prep,
                      Semantics semantics);

struct DispersionReport {
  int n = 0;
  Semantics semantics = Semantics::BvN;
  int samples = 0;
  // Counts indexed by IntervalKind: Point, OpenInterval, ClosedInterval.
  std::array<int, 3> counts{0, 0, 0};

  bool contains(IntervalKind k) const {
    return counts[static_cast<size_t>(k)] > 0;
  }
};

/**
 * Draw `samples` random preparations over random orthonormal families and
 * record the verdict kind forced on every member. Preparations range over
 * the three determinate state classes (range, kernel, superposed). Seeded
 * and reproducible.
 */
DispersionReport dispersion_scan(int n, int samples, std::uint64_t seed,
                                 Semantics semantics);

/** Random orthonormal family: orthonormalize a random complex matrix. */
PropositionFamily random_family(int n, std::mt19937_64& rng,
                                const Tolerances& tol = {});

}  // namespace qlval
