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

// Wall-clock comparison of the serial reference elimination against the
// OpenMP kernel on the same tableaus. The parallel path updates each row
// from a snapshot of the pivot row, so the two backends must agree bitwise;
// this harness verifies that while it times them. Timing ratios depend on
// the host's core count and are reported, not asserted.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "qlval/elimination.hpp"
#include "qlval/sampling.hpp"

namespace {

qlval::AugmentedTableau random_tableau(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  qlval::CVector cells(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (qlval::Complex& c : cells) c = {qlval::gaussian(rng), qlval::gaussian(rng)};
  return qlval::make_tableau(n, std::move(cells));
}

qlval::AugmentedTableau run_all(qlval::AugmentedTableau t, qlval::EliminationBackend backend) {
  qlval::EliminationOptions opts;
  opts.backend = backend;
  for (int i = 0; i + 1 < t.dim; ++i) t = qlval::eliminate_step(std::move(t), opts);
  return t;
}

double checksum(const qlval::AugmentedTableau& t) {
  double acc = 0.0;
  for (const qlval::Complex& c : t.cells) acc += c.real() + c.imag();
  return acc;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  std::printf("n,serial_ms,parallel_ms,ratio,bitwise_equal\n");

  for (int n : {128, 256, 512, 1024}) {
    const qlval::AugmentedTableau base = random_tableau(n, 0x9e3779b97f4a7c15ull + n);

    const auto t0 = clock::now();
    const qlval::AugmentedTableau serial = run_all(base, qlval::EliminationBackend::Serial);
    const auto t1 = clock::now();
    const qlval::AugmentedTableau parallel = run_all(base, qlval::EliminationBackend::Parallel);
    const auto t2 = clock::now();

    const double serial_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double parallel_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    const bool equal = serial.cells == parallel.cells;
    std::printf("%d,%.3f,%.3f,%.3f,%s\n", n, serial_ms, parallel_ms,
                parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0, equal ? "true" : "false");
    if (!equal) {
      std::fprintf(stderr, "backend mismatch at n=%d (checksums %.17g vs %.17g)\n", n,
                   checksum(serial), checksum(parallel));
      return 1;
    }
  }
  return 0;
}
