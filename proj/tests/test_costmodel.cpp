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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qlval/costmodel.hpp"

using namespace qlval;

namespace {

const std::vector<int> kDoubling{8, 16, 32, 64, 128};

std::uint64_t kernel_mul_count(int n) {
  std::uint64_t muls = 0;
  for (int i = 0; i < n - 1; ++i) {
    const std::uint64_t edge = static_cast<std::uint64_t>(n - i);
    muls += edge * edge;
  }
  return muls;
}

}  // namespace

TEST_CASE("sequential range cost is exactly 3(n-1) at unit weights") {
  CHECK(sequential_cost_x(2).work == 3);
  CHECK(sequential_cost_x(11).work == 30);
  CHECK(sequential_cost_x(64).work == 189);
  for (int n = 2; n <= 64; ++n) {
    const CostReport r = sequential_cost_x(n);
    CHECK(r.work == 3 * static_cast<std::uint64_t>(n - 1));
    CHECK(r.processors == 1);
    CHECK(r.time == r.work);
    CHECK(r.cost == r.work);
    CHECK(r.efficiency == 1.0);
    CHECK(r.oracle_queries == 0);
  }
  CHECK_THROWS_AS(sequential_cost_x(1), DimensionTooSmall);
}

TEST_CASE("weighted range cost rescales without changing the shape") {
  // Real-flop weights: a complex multiply is 6 flops, a compare 1.
  const OpWeights w{6, 11, 2, 1};
  for (int n : {2, 5, 32})
    CHECK(sequential_cost_x(n, w).work == 13 * static_cast<std::uint64_t>(n - 1));

  OpWeights bad;
  bad.add = 0;
  CHECK_THROWS_AS(sequential_cost_x(4, bad), PreconditionViolated);
}

TEST_CASE("square-mesh cost model keeps the law of work") {
  for (int n : {2, 4, 8, 16}) {
    const CostReport r = pram_cost_y(n);
    CHECK(r.work == kernel_mul_count(n));
    CHECK(r.processors == static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
    CHECK(r.time == static_cast<std::uint64_t>(n - 1));
    CHECK(r.cost == r.processors * r.time);
    CHECK(r.efficiency <= 1.0);
    CHECK(r.efficiency > 0.0);
    // Brent-style bound: t processors cannot beat work/p rounds.
    CHECK(r.time * r.processors >= r.work);
    CHECK(r.oracle_queries == n - 1);
  }
  // The worked example: 64 processors finish in 7 rounds, cost 448.
  const CostReport r8 = pram_cost_y(8);
  CHECK(r8.work == 203);
  CHECK(r8.cost == 448);
}

TEST_CASE("oracle-coprocessor cost stays linear and superefficient") {
  const CostReport r2 = qpram_cost_y(2, 3);
  CHECK(r2.cost == 3);
  CHECK(r2.work == 12);  // full unit-weight elimination total at n = 2
  CHECK(r2.efficiency == doctest::Approx(4.0));

  for (int n : {4, 8, 32}) {
    const CostReport r = qpram_cost_y(n, 3);
    CHECK(r.cost == 3 * static_cast<std::uint64_t>(n - 1));
    CHECK(r.efficiency > 1.0);  // scalar work grows cubically, cost linearly
    CHECK(r.oracle_queries == n - 1);
  }
  CHECK_THROWS_AS(qpram_cost_y(4, 0), PreconditionViolated);
}

TEST_CASE("growth exponent recovers exact power laws") {
  ScalingSeries cubic;
  for (int n : {2, 4, 8, 16}) cubic.points.push_back({n, static_cast<double>(n) * n * n});
  CHECK(growth_exponent(cubic) == doctest::Approx(3.0).epsilon(1e-12));

  ScalingSeries linear;
  for (int n : {3, 9, 27}) linear.points.push_back({n, 5.0 * n});
  CHECK(growth_exponent(linear) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("growth exponent rejects degenerate series") {
  ScalingSeries two;
  two.points = {{2, 1.0}, {4, 8.0}};
  CHECK_THROWS_AS(growth_exponent(two), DegenerateSeries);

  ScalingSeries repeated;
  repeated.points = {{2, 1.0}, {2, 2.0}, {4, 8.0}};
  CHECK_THROWS_AS(growth_exponent(repeated), DegenerateSeries);

  ScalingSeries nonpositive;
  nonpositive.points = {{2, 1.0}, {4, 0.0}, {8, 8.0}};
  CHECK_THROWS_AS(growth_exponent(nonpositive), DegenerateSeries);
}

TEST_CASE("measured scaling exponents land in the advertised bands") {
  ScalingSeries work_x, work_y, cost_pram, cost_qpram, eff;
  for (int n : kDoubling) {
    work_x.points.push_back({n, static_cast<double>(sequential_cost_x(n).work)});
    const CostReport pram = pram_cost_y(n);
    const CostReport qpram = qpram_cost_y(n, 3);
    work_y.points.push_back({n, static_cast<double>(qpram.work)});
    cost_pram.points.push_back({n, static_cast<double>(pram.cost)});
    cost_qpram.points.push_back({n, static_cast<double>(qpram.cost)});
    eff.points.push_back({n, qpram.efficiency});
  }
  CHECK(std::abs(growth_exponent(work_x) - 1.0) < 0.1);
  CHECK(std::abs(growth_exponent(work_y) - 3.0) < 0.2);
  CHECK(std::abs(growth_exponent(cost_pram) - 3.0) < 0.2);
  CHECK(std::abs(growth_exponent(cost_qpram) - 1.0) < 0.1);
  CHECK(std::abs(growth_exponent(eff) - 2.0) < 0.2);
}

TEST_CASE("sequential range cost and coprocessor cost grow identically") {
  const RelationReport r = relation_check(kDoubling, 3);
  CHECK(r.equal_growth);
  // With three coprocessors both cost curves are literally 3(n-1).
  CHECK(r.exponent_cx == doctest::Approx(r.exponent_cqy).epsilon(1e-12));
}

TEST_CASE("bench rows match the standalone cost reports") {
  const std::vector<BenchRow> rows = bench_rows(kDoubling, 3, {}, {});
  REQUIRE(rows.size() == kDoubling.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const int n = kDoubling[i];
    CHECK(rows[i].n == n);
    CHECK(rows[i].work_x == sequential_cost_x(n).work);
    const CostReport qpram = qpram_cost_y(n, 3);
    CHECK(rows[i].work_y == qpram.work);
    CHECK(rows[i].cost_qpram_y == qpram.cost);
    CHECK(rows[i].cost_pram_y == pram_cost_y(n).cost);
    CHECK(rows[i].eff_qpram == doctest::Approx(qpram.efficiency));
  }
  CHECK_THROWS_AS(bench_rows({8, 1}, 3, {}, {}), DimensionTooSmall);
}

TEST_CASE("weighting rescales bench columns but not their growth") {
  const OpWeights w{6, 11, 2, 1};
  const std::vector<BenchRow> unit = bench_rows(kDoubling, 3, {}, {});
  const std::vector<BenchRow> flops = bench_rows(kDoubling, 3, w, {});

  ScalingSeries unit_y, flops_y;
  for (size_t i = 0; i < unit.size(); ++i) {
    CHECK(flops[i].work_x == 13 * static_cast<std::uint64_t>(kDoubling[i] - 1));
    CHECK(flops[i].work_y > unit[i].work_y);
    unit_y.points.push_back({unit[i].n, static_cast<double>(unit[i].work_y)});
    flops_y.points.push_back({flops[i].n, static_cast<double>(flops[i].work_y)});
  }
  CHECK(std::abs(growth_exponent(unit_y) - growth_exponent(flops_y)) < 0.1);
}
