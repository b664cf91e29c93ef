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

#include "qlval/errors.hpp"

namespace qlval {

/**
 * Per-kind weights applied when totalling an operation count. One unit per
 * complex operation by default; callers may substitute real-flop weights
 * (e.g. 6,11,2,1) without changing any recorded count.
 */
struct OpWeights {
  std::uint64_t mul = 1;
  std::uint64_t div = 1;
  std::uint64_t add = 1;
  std::uint64_t cmp = 1;

  void validate() const {
    if (mul == 0 || div == 0 || add == 0 || cmp == 0)
      throw PreconditionViolated("operation weights must be positive");
  }
};

/** Monotone counters for the primitive operations an algorithm performs. */
struct OpCounter {
  std::uint64_t mul = 0;
  std::uint64_t div = 0;
  std::uint64_t add = 0;
  std::uint64_t cmp = 0;

  void add_counts(std::uint64_t m, std::uint64_t d, std::uint64_t a, std::uint64_t c) {
    mul += m;
    div += d;
    add += a;
    cmp += c;
  }

  std::uint64_t total(const OpWeights& w = {}) const {
    return mul * w.mul + div * w.div + add * w.add + cmp * w.cmp;
  }
};

}  // namespace qlval
