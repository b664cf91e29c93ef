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

#include <cstdint>
#include <vector>

#include "qlval/opcount.hpp"
#include "qlval/solvability.hpp"

namespace qlval {

/**
 * One machine-model cost entry. cost = processors * time always; classical
 * entries additionally satisfy time >= ceil(work / processors) and
 * efficiency <= 1 (the law of work). The oracle-coprocessor entry is exempt
 * from the efficiency cap; its ratio grows ~ n^2.
 */
struct CostReport {
  int n = 0;
  std::uint64_t work = 0;
  std::uint64_t processors = 0;
  std::uint64_t time = 0;
  std::uint64_t cost = 0;
  double efficiency = 0.0;
  int oracle_queries = 0;
};

struct ScalingPoint {
  int n = 0;
  double value = 0.0;
};

/** At least three points, n strictly increasing, values positive. */
struct ScalingSeries {
  std::vector<ScalingPoint> points;
};

/**
 * Sequential range-membership cost at dimension n, measured from an actual
 * instrumented run (the count is input-independent): work 3(n-1) at unit
 * weights, one processor, efficiency exactly 1.
 */
CostReport sequential_cost_x(int n, const OpWeights& weights = {});

/**
 * PRAM cost of the kernel decision: n^2 processors, one round per
 * elimination step at unit round time, so cost = n^2 (n-1). Work is counted
 * in the same currency as the rounds, one unit per active-block element
 * computed (the elimination's multiply count from an instrumented run);
 * weights do not apply to this entry.
 */
CostReport pram_cost_y(int n);

/**
 * Oracle-coprocessor cost of the kernel decision: q processors (independent
 * of n), one round per oracle query, cost = q (n-1). Work is the sequential
 * scalar-operation total of an instrumented kernel run, so efficiency may
 * exceed 1 and grows ~ n^2.
 */
CostReport qpram_cost_y(int n, int q = 3, const OpWeights& weights = {});

/**
 * Least-squares slope of log(value) against log(n). Throws DegenerateSeries
 * for fewer than three points, non-increasing n, or non-positive values.
 */
double growth_exponent(const ScalingSeries& series);

/** Slope comparison at the shared 0.15 tolerance. */
bool equal_growth(double e1, double e2, double tol = 0.15);

/**
 * Fitted exponents of the sequential range cost and the oracle-coprocessor
 * kernel cost over the given dimensions, plus whether they grow alike.
 */
struct RelationReport {
  double exponent_cx = 0.0;
  double exponent_cqy = 0.0;
  bool equal_growth = false;
};
RelationReport relation_check(const std::vector<int>& dims, int q = 3);

/** One row of the scaling table behind the bench command. */
struct BenchRow {
  int n = 0;
  std::uint64_t work_x = 0;
  std::uint64_t work_y = 0;
  std::uint64_t cost_pram_y = 0;
  std::uint64_t cost_qpram_y = 0;
  double eff_qpram = 0.0;
};

/**
 * Instrumented scaling rows for the given dimensions (rows independent, may
 * be computed in parallel, always reported in input order).
 */
std::vector<BenchRow> bench_rows(const std::vector<int>& dims, int q,
                                 const OpWeights& weights = {},
                                 const SolveOptions& opts = {});

}  // namespace qlval
