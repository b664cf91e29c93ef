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

#include "qlval/probability.hpp"

#include "qlval/sampling.hpp"

namespace qlval {

namespace {

ProbabilityVerdict point(double v) { return {IntervalKind::Point, v, v}; }
ProbabilityVerdict open_unit() { return {IntervalKind::OpenInterval, 0.0, 1.0}; }
ProbabilityVerdict closed_unit() { return {IntervalKind::ClosedInterval, 0.0, 1.0}; }

// State class a preparation pins the prepared member to, when determinate.
enum class StateClass { Range, Kernel, Strict, None };

StateClass classify(PrepKind kind, Semantics semantics) {
  switch (semantics) {
    case Semantics::BvN:
      // b(0,0) = b(0,1): a failed range statement and a true kernel statement
      // are the same preparation, so everything collapses to range vs kernel.
      switch (kind) {
        case PrepKind::XTrue:
        case PrepKind::YFalse:
          return StateClass::Range;
        case PrepKind::XFalse:
        case PrepKind::YTrue:
        case PrepKind::Superposed:
          return StateClass::Kernel;
      }
      break;
    case Semantics::Partial:
      switch (kind) {
        case PrepKind::XTrue: return StateClass::Range;
        case PrepKind::YTrue: return StateClass::Kernel;
        case PrepKind::Superposed: return StateClass::Strict;
        case PrepKind::XFalse:
        case PrepKind::YFalse:
          return StateClass::None;  // a bare negation fixes no state class
      }
      break;
  }
  return StateClass::None;
}

}  // namespace

PropositionFamily make_family(std::vector<Projector> members, const Tolerances& tol) {
  const int n = static_cast<int>(members.size());
  if (n < 2) throw InvalidFamily("family needs at least two members");
  CMatrix sum(members[0].dim, members[0].dim);
  for (int k = 0; k < n; ++k) {
    const Projector& m = members[static_cast<size_t>(k)];
    if (m.dim != n)
      throw InvalidFamily("family member dimension must equal member count");
    if (m.rank != 1) throw InvalidFamily("family members must be rank-one");
    sum = sum + m.matrix;
    for (int l = 0; l < k; ++l)
      if (!orthogonal(m, members[static_cast<size_t>(l)], tol))
        throw InvalidFamily("family members must be mutually orthogonal");
  }
  if (!sum.approx_equal(CMatrix::identity(n), tol.eps_tol))
    throw InvalidFamily("family members must sum to the identity");

  PropositionFamily f;
  f.n = n;
  f.members = std::move(members);
  return f;
}

ProbabilityVerdict forced_probability(const PropositionFamily& family,
                                      const Preparation& prep, int target,
                                      Semantics semantics) {
  const int n = family.n;
  if (prep.member < 0 || prep.member >= n || target < 0 || target >= n)
    throw InvalidFamily("member index out of range");

  const StateClass cls = classify(prep.kind, semantics);
  const bool own = (target == prep.member);

  switch (cls) {
    case StateClass::Range:
      // The state is a member's basis vector: true there, false elsewhere.
      return own ? point(1.0) : point(0.0);
    case StateClass::Kernel:
      if (own) return point(0.0);
      // In dimension two the kernel of one member IS the other's range.
      if (n == 2) return point(1.0);
      return closed_unit();
    case StateClass::Strict:
      if (own) return open_unit();
      if (n == 2) return open_unit();  // the qubit's gap is mutual
      return closed_unit();
    case StateClass::None:
      return closed_unit();
  }
  return closed_unit();
}

bool additivity_check(const PropositionFamily& family, const Preparation& prep,
                      Semantics semantics) {
  // Endpoint sums are integers (every bound is 0 or 1), so feasibility of
  // "sum equals one" reduces to exact integer comparisons with attainability
  // tracked for the open endpoints.
  int lo_sum = 0, hi_sum = 0;
  bool lo_attainable = true, hi_attainable = true;
  for (int k = 0; k < family.n; ++k) {
    const ProbabilityVerdict v = forced_probability(family, prep, k, semantics);
    lo_sum += static_cast<int>(v.lo);
    hi_sum += static_cast<int>(v.hi);
    if (v.kind == IntervalKind::OpenInterval) {
      lo_attainable = false;
      hi_attainable = false;
    }
  }
  if (lo_sum < 1 && hi_sum > 1) return true;
  if (lo_sum == 1 && hi_sum == 1) return true;  // all members pinned
  if (lo_sum == 1) return lo_attainable;
  if (hi_sum == 1) return hi_attainable;
  return false;
}

DispersionReport dispersion_scan(int n, int samples, std::uint64_t seed,
                                 Semantics semantics) {
  if (n < 2) throw InvalidFamily("dispersion scan needs dimension at least two");
  if (samples < 1) throw PreconditionViolated("dispersion scan needs at least one sample");

  static constexpr PrepKind kDeterminate[] = {PrepKind::XTrue, PrepKind::YTrue,
                                              PrepKind::Superposed};
  std::mt19937_64 rng(seed);
  DispersionReport report;
  report.n = n;
  report.semantics = semantics;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const PropositionFamily family = random_family(n, rng);
    Preparation prep;
    prep.member = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    prep.kind = kDeterminate[rng() % 3];
    for (int target = 0; target < n; ++target) {
      const ProbabilityVerdict v = forced_probability(family, prep, target, semantics);
      report.counts[static_cast<size_t>(v.kind)] += 1;
    }
  }
  return report;
}

PropositionFamily random_family(int n, std::mt19937_64& rng, const Tolerances& tol) {
  while (true) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Complex(gaussian(rng), gaussian(rng));
    const GreedySelection sel = greedy_independent_columns(m, tol.eps_rank);
    if (sel.orthonormal.cols() != n) continue;  // rank-deficient draw, retry

    std::vector<Projector> members;
    members.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      Projector p;
      p.dim = n;
      p.matrix = outer(sel.orthonormal.column(k));
      p.rank = 1;
      p.nullity = n - 1;
      members.push_back(std::move(p));
    }
    return make_family(std::move(members), tol);
  }
}

}  // namespace qlval
