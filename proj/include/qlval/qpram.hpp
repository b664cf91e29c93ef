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

#include "qlval/solvability.hpp"

namespace qlval {

/**
 * Outcome labels for the coprocessor's measurement basis. Zero is the
 * zero-valued cell outcome; Ann marks the one cell the elimination can
 * leave nonzero (the bottom-right entry). Outcomes are labels, not stored
 * floating values: the distinguishing datum lives in the tableau.
 */
enum class OutcomeTag { Zero, Ann };

enum class CounterTag { C1, C2 };

/**
 * One oracle coprocessor: a uniform superposition over the n^2 cell
 * outcomes of the current elimination iteration, refreshed on every oracle
 * query. Unit norm throughout.
 */
struct ProcessorState {
  int n = 0;
  CVector amplitudes;  // n^2 entries, each 1/n after every refresh
  int iteration = 0;
};

/** Two-level counter register, amplitudes proportional to (1, n^2 - 1). */
struct CounterState {
  Complex c1;
  Complex c2;
};

struct CorrelatedTerm {
  OutcomeTag outcome = OutcomeTag::Zero;
  CounterTag counter = CounterTag::C1;
  Complex amplitude;
};

/**
 * Joint processor-counter state after the correlation gate, as declared by
 * the protocol: a single (Zero, C1) term with amplitude 1 in the consistent
 * case, an equal-weight pair {(Zero, C1), (Ann, C2)} otherwise.
 */
struct CorrelatedState {
  std::vector<CorrelatedTerm> terms;
};

struct MeasurementRecord {
  int shots = 0;
  int zeros = 0;
  std::uint64_t seed = 0;
};

struct QpramMachine {
  int n = 0;
  int q = 0;
  std::vector<ProcessorState> processors;
  std::vector<CounterState> counters;
  AugmentedTableau tableau;
  int oracle_queries = 0;
  double tau = 0.0;  // correlation gate duration, default pi
  std::vector<MeasurementRecord> records;
};

/**
 * Assemble a machine over the kernel system of a rank-one proposition with
 * q oracle coprocessors. Throws PreconditionViolated for q < 1 and
 * propagates the kernel-system construction errors.
 */
QpramMachine init_machine(const Projector& p, const StateVector& psi, int q,
                          const SolveOptions& opts = {});

/**
 * One oracle query: one elimination step, then every processor's outcome
 * basis is refreshed to the new iteration's cells (amplitudes stay a uniform
 * 1/n). Throws PreconditionViolated once all n-1 queries have run.
 */
QpramMachine oracle_step(QpramMachine m, const SolveOptions& opts = {});

/**
 * Correlation-gate contract for one processor after the final oracle query
 * (NotFinalized before that): reads the bottom-right cell against the same
 * relative consistency threshold the kernel decision uses.
 */
CorrelatedState correlate(const QpramMachine& m, int processor,
                          const SolveOptions& opts = {});

/**
 * Correlation Hamiltonian on the 4-dimensional joint space, basis order
 * (Zero,C1), (Zero,C2), (Ann,C1), (Ann,C2). With a nonzero final cell it is
 * the two-term projector diag(1,0,0,1); when the final cell vanishes the
 * Ann outcome coincides with Zero and the second term drops: diag(1,0,0,0).
 * Hermitian and idempotent either way.
 */
CMatrix hamiltonian(OutcomeTag a_label);

/**
 * Literal correlation gate exp(-i tau H) (hbar = 1): diagonal, phase e^{-i
 * tau} on the Hamiltonian's +1 eigendirections. Unitary for every tau; tau
 * of 0 or 2 pi gives the identity. Being phase-only it cannot by itself
 * produce the declared post-measurement state; correlate() implements that
 * contract directly.
 */
CMatrix u_c_gate(double tau, OutcomeTag a_label = OutcomeTag::Ann);

/**
 * Probability of the all-zeros readout: the Zero-outcome mass of the
 * correlated state. Exactly 1.0 in the consistent case and 0.5 otherwise.
 * Throws PreconditionViolated when the state is not normalized.
 */
double measure_zero_prob(const CorrelatedState& c);

/** Seeded Bernoulli readout; shots must be positive. */
MeasurementRecord sample(const CorrelatedState& c, int shots, std::uint64_t seed);

/**
 * Decision rule for H0 "Pr(zero) = 1/2" against "Pr(zero) = 1": reject iff
 * every one-shot record read zero. Exact error rates: type I = 0.5^q, power
 * 1 under the alternative.
 */
struct HypothesisReport {
  int q = 0;
  bool reject = false;
  double type_i_error = 0.0;
  double power = 1.0;
};
HypothesisReport hypothesis_test(const std::vector<MeasurementRecord>& records);

/**
 * Smallest q whose all-zeros rule meets both error targets exactly:
 * p0^q <= alpha and p1^q >= target power. Throws Infeasible when no
 * q <= 1e6 satisfies both (p1^q decays monotonically, so the search stops
 * at the first power violation).
 */
int power_analysis(double alpha, double power, double p0, double p1);

}  // namespace qlval
