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

#include "qlval/matrix.hpp"
#include "qlval/opcount.hpp"

namespace qlval {

enum class EliminationBackend {
  Auto,      // parallel kernel for large active blocks, serial otherwise
  Serial,    // reference implementation, always single-threaded
  Parallel,  // row-parallel kernel regardless of block size
};

struct EliminationOptions {
  bool pivoting = true;   // row swaps allowed (a swap costs zero primitives)
  double eps_tol = 1e-9;  // pivot-magnitude threshold
  EliminationBackend backend = EliminationBackend::Auto;
};

/**
 * Square augmented grid for the kernel system K X = Psi: for an n-dimensional
 * proposition, columns 0..n-2 hold the independent kernel columns and column
 * n-1 holds the state amplitudes.
 *
 * Invariant: after iteration i, rows 0..i-1 and columns 0..i-1 are zero
 * within the working tolerance. The step at iteration i subtracts the rank-one
 * product (column i x row i) / pivot over the whole active block, which zeroes
 * the pivot row and pivot column together; after n-1 iterations only the
 * bottom-right cell can remain nonzero.
 */
struct AugmentedTableau {
  int dim = 0;
  CVector cells;       // row-major dim x dim
  int iteration = 0;   // completed elimination steps
  double scale = 0.0;  // max |cell| at construction; consistency reference
  OpCounter ops;

  Complex& at(int i, int j) {
    return cells[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)];
  }
  const Complex& at(int i, int j) const {
    return cells[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)];
  }
};

/** Build a tableau from preassembled cells, recording the consistency scale. */
AugmentedTableau make_tableau(int dim, CVector cells);

/** True when every active-block cell (rows/cols >= iteration) is within eps. */
bool active_block_zero(const AugmentedTableau& t, double eps);

/**
 * One elimination iteration on the active block (a rank-one update of size
 * (n-i+1)^2 in 1-based terms). Counted primitives: one divide per active row
 * (the row multiplier), one multiply and one add per active cell, and one
 * comparison for the pivot-magnitude test. Row swaps cost nothing.
 *
 * With pivoting enabled the largest-magnitude entry of the active part of the
 * pivot column is swapped in. If no usable pivot exists the step degrades to
 * a no-op when the whole active block is already zero (the remaining system
 * is 0 = 0) and throws ZeroPivot otherwise. Throws PreconditionViolated once
 * all n-1 iterations have run.
 *
 * Serial and parallel backends perform identical arithmetic per cell (no
 * accumulation-order dependence), so their outputs and counters match
 * bitwise; tests rely on that.
 */
AugmentedTableau eliminate_step(AugmentedTableau t, const EliminationOptions& opts = {});

}  // namespace qlval
