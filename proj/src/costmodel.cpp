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

#include "qlval/costmodel.hpp"

#include <cmath>

namespace qlval {

namespace {

// Canonical instrumentation instance at dimension n: the proposition onto
// the uniform state. Its kernel system is strictly diagonally dominant, so
// the elimination needs no row swaps and the instance works under either
// pivoting configuration. Counts are input-independent; only the verdict
// depends on the state.
Projector canonical_projector(int n) {
  CVector ones(static_cast<size_t>(n), Complex(1.0, 0.0));
  return projector_from_state(make_state(ones));
}

StateVector canonical_kernel_state(int n) {
  CVector v(static_cast<size_t>(n));
  v[0] = 1.0;
  v[1] = -1.0;
  return make_state(v);
}

OpCounter measured_range_work(int n) {
  CVector ones(static_cast<size_t>(n), Complex(1.0, 0.0));
  return range_membership(canonical_projector(n), make_state(ones)).work;
}

OpCounter measured_kernel_work(int n, const SolveOptions& opts = {}) {
  return kernel_membership(canonical_projector(n), canonical_kernel_state(n), opts).work;
}

}  // namespace

CostReport sequential_cost_x(int n, const OpWeights& weights) {
  if (n < 2) throw DimensionTooSmall("cost model needs dimension at least two");
  weights.validate();
  CostReport r;
  r.n = n;
  r.work = measured_range_work(n).total(weights);
  r.processors = 1;
  r.time = r.work;
  r.cost = r.processors * r.time;
  r.efficiency = r.cost == 0 ? 1.0 : static_cast<double>(r.work) / static_cast<double>(r.cost);
  r.oracle_queries = 0;
  return r;
}

CostReport pram_cost_y(int n) {
  if (n < 2) throw DimensionTooSmall("cost model needs dimension at least two");
  CostReport r;
  r.n = n;
  // One work unit per element computed, matching the one-element-per-processor
  // round structure: exactly the elimination's multiply count.
  r.work = measured_kernel_work(n).mul;
  r.processors = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  r.time = static_cast<std::uint64_t>(n - 1);
  r.cost = r.processors * r.time;
  r.efficiency = static_cast<double>(r.work) / static_cast<double>(r.cost);
  r.oracle_queries = n - 1;
  return r;
}

CostReport qpram_cost_y(int n, int q, const OpWeights& weights) {
  if (n < 2) throw DimensionTooSmall("cost model needs dimension at least two");
  if (q < 1) throw PreconditionViolated("oracle coprocessor count must be at least one");
  weights.validate();
  CostReport r;
  r.n = n;
  r.work = measured_kernel_work(n).total(weights);
  r.processors = static_cast<std::uint64_t>(q);
  r.time = static_cast<std::uint64_t>(n - 1);
  r.cost = r.processors * r.time;
  r.efficiency = static_cast<double>(r.work) / static_cast<double>(r.cost);
  r.oracle_queries = n - 1;
  return r;
}

double growth_exponent(const ScalingSeries& series) {
  const auto& pts = series.points;
  if (pts.size() < 3)
    throw DegenerateSeries("growth fit needs at least three points");
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].value <= 0.0 || !std::isfinite(pts[i].value))
      throw DegenerateSeries("growth fit needs positive finite values");
    if (i > 0 && pts[i].n <= pts[i - 1].n)
      throw DegenerateSeries("growth fit needs strictly increasing dimensions");
  }

  double sx = 0.0, sy = 0.0;
  for (const ScalingPoint& p : pts) {
    sx += std::log(static_cast<double>(p.n));
    sy += std::log(p.value);
  }
  const double mx = sx / static_cast<double>(pts.size());
  const double my = sy / static_cast<double>(pts.size());
  double num = 0.0, den = 0.0;
  for (const ScalingPoint& p : pts) {
    const double dx = std::log(static_cast<double>(p.n)) - mx;
    num += dx * (std::log(p.value) - my);
    den += dx * dx;
  }
  return num / den;
}

bool equal_growth(double e1, double e2, double tol) {
  return std::abs(e1 - e2) <= tol;
}

RelationReport relation_check(const std::vector<int>& dims, int q) {
  ScalingSeries cx, cqy;
  for (int n : dims) {
    cx.points.push_back({n, static_cast<double>(sequential_cost_x(n).cost)});
    cqy.points.push_back({n, static_cast<double>(qpram_cost_y(n, q).cost)});
  }
  RelationReport r;
  r.exponent_cx = growth_exponent(cx);
  r.exponent_cqy = growth_exponent(cqy);
  r.equal_growth = equal_growth(r.exponent_cx, r.exponent_cqy);
  return r;
}

std::vector<BenchRow> bench_rows(const std::vector<int>& dims, int q,
                                 const OpWeights& weights, const SolveOptions& opts) {
  weights.validate();
  if (q < 1) throw PreconditionViolated("oracle coprocessor count must be at least one");
  for (int n : dims)  // validate up front; the parallel region must not throw
    if (n < 2) throw DimensionTooSmall("cost model needs dimension at least two");
  std::vector<BenchRow> rows(dims.size());
  std::exception_ptr failure;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(dims.size()); ++i) {
    try {
      const int n = dims[static_cast<size_t>(i)];
      BenchRow row;
      row.n = n;
      row.work_x = measured_range_work(n).total(weights);
      const OpCounter kernel = measured_kernel_work(n, opts);
      row.work_y = kernel.total(weights);
      row.cost_pram_y = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) *
                        static_cast<std::uint64_t>(n - 1);
      row.cost_qpram_y = static_cast<std::uint64_t>(q) * static_cast<std::uint64_t>(n - 1);
      row.eff_qpram = static_cast<double>(row.work_y) / static_cast<double>(row.cost_qpram_y);
      rows[static_cast<size_t>(i)] = row;
    } catch (...) {
      // Exceptions must not unwind out of the parallel region; surface the
      // first one after the loop.
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace qlval
