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

#include "qlval/elimination.hpp"

#include <algorithm>
#include <utility>

namespace qlval {

namespace {

// Active blocks below this edge length run serially even under Auto; FP
// results are backend-independent, so the cutover is a pure throughput knob.
constexpr int kParallelCutover = 96;

// Row-parallel rank-one update. Each row j of the active block computes its
// multiplier m = a(j,i)/pivot and subtracts m * (pivot row); rows touch only
// their own cells plus the shared pivot-row snapshot, so iterations are
// independent. Counters are accumulated per operation and reduced.
void update_active_block(AugmentedTableau& t, int i, const CVector& pivot_row,
                         bool parallel, std::uint64_t& muls, std::uint64_t& divs,
                         std::uint64_t& adds) {
  const int n = t.dim;
  const Complex piv = pivot_row[static_cast<size_t>(i)];
  std::uint64_t mul_count = 0, div_count = 0, add_count = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel) \
    reduction(+ : mul_count, div_count, add_count)
#else
  (void)parallel;
#endif
  for (int j = i; j < n; ++j) {
    const Complex m = t.at(j, i) / piv;
    ++div_count;
    for (int l = i; l < n; ++l) {
      t.at(j, l) -= m * pivot_row[static_cast<size_t>(l)];
      ++mul_count;
      ++add_count;
    }
  }

  muls += mul_count;
  divs += div_count;
  adds += add_count;
}

}  // namespace

AugmentedTableau make_tableau(int dim, CVector cells) {
  if (dim < 2) throw DimensionTooSmall("tableau dimension must be at least 2");
  if (cells.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim))
    throw DimensionMismatch("tableau cell count must be dim*dim");
  if (!all_finite(cells)) throw ParseError("tableau has non-finite cells");
  AugmentedTableau t;
  t.dim = dim;
  t.cells = std::move(cells);
  t.scale = max_abs(t.cells);
  return t;
}

bool active_block_zero(const AugmentedTableau& t, double eps) {
  for (int j = t.iteration; j < t.dim; ++j)
    for (int l = t.iteration; l < t.dim; ++l)
      if (std::abs(t.at(j, l)) > eps) return false;
  return true;
}

AugmentedTableau eliminate_step(AugmentedTableau t, const EliminationOptions& opts) {
  const int n = t.dim;
  const int i = t.iteration;
  if (i >= n - 1)
    throw PreconditionViolated("tableau already ran all n-1 elimination steps");

  int pivot_row = i;
  if (opts.pivoting) {
    for (int j = i + 1; j < n; ++j)
      if (std::abs(t.at(j, i)) > std::abs(t.at(pivot_row, i))) pivot_row = j;
  }
  // The pivot-magnitude test is the step's single counted comparison.
  t.ops.cmp += 1;
  if (std::abs(t.at(pivot_row, i)) <= opts.eps_tol) {
    if (active_block_zero(t, opts.eps_tol)) {
      // Remaining system is 0 = 0; the step is an exact no-op.
      t.iteration += 1;
      return t;
    }
    throw ZeroPivot(opts.pivoting
                        ? "no usable pivot in the active column"
                        : "zero pivot with row pivoting disabled");
  }
  if (pivot_row != i)
    for (int l = 0; l < n; ++l) std::swap(t.at(i, l), t.at(pivot_row, l));

  CVector pivot_snapshot(static_cast<size_t>(n));
  for (int l = i; l < n; ++l) pivot_snapshot[static_cast<size_t>(l)] = t.at(i, l);

  bool parallel = false;
#ifdef _OPENMP
  switch (opts.backend) {
    case EliminationBackend::Serial: parallel = false; break;
    case EliminationBackend::Parallel: parallel = true; break;
    case EliminationBackend::Auto: parallel = (n - i) >= kParallelCutover; break;
  }
#endif
  update_active_block(t, i, pivot_snapshot, parallel, t.ops.mul, t.ops.div, t.ops.add);

  t.iteration += 1;
  return t;
}

}  // namespace qlval
