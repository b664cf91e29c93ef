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

#include "qlval/qpram.hpp"

#include <cmath>
#include <numbers>

#include "qlval/sampling.hpp"

namespace qlval {

namespace {

void refresh_processor(ProcessorState& p) {
  const double amp = 1.0 / static_cast<double>(p.n);
  p.amplitudes.assign(static_cast<size_t>(p.n) * static_cast<size_t>(p.n),
                      Complex(amp, 0.0));
}

}  // namespace

QpramMachine init_machine(const Projector& p, const StateVector& psi, int q,
                          const SolveOptions& opts) {
  if (q < 1)
    throw PreconditionViolated("machine needs at least one oracle coprocessor");

  QpramMachine m;
  m.n = p.dim;
  m.q = q;
  m.tableau = build_kernel_tableau(p, psi, opts);
  m.oracle_queries = 0;
  m.tau = std::numbers::pi;

  const int n2 = m.n * m.n;
  const double c_norm =
      std::sqrt(1.0 + static_cast<double>(n2 - 1) * static_cast<double>(n2 - 1));
  for (int k = 0; k < q; ++k) {
    ProcessorState ps;
    ps.n = m.n;
    ps.iteration = 0;
    refresh_processor(ps);
    m.processors.push_back(std::move(ps));
    CounterState cs;
    cs.c1 = Complex(1.0 / c_norm, 0.0);
    cs.c2 = Complex(static_cast<double>(n2 - 1) / c_norm, 0.0);
    m.counters.push_back(cs);
  }
  return m;
}

QpramMachine oracle_step(QpramMachine m, const SolveOptions& opts) {
  if (m.oracle_queries >= m.n - 1)
    throw PreconditionViolated("machine already ran all n-1 oracle queries");

  EliminationOptions elim;
  elim.pivoting = opts.pivoting;
  elim.eps_tol = opts.eps_tol;
  elim.backend = opts.backend;
  m.tableau = eliminate_step(std::move(m.tableau), elim);
  m.oracle_queries += 1;
  for (ProcessorState& p : m.processors) {
    refresh_processor(p);
    p.iteration = m.oracle_queries;
  }
  return m;
}

CorrelatedState correlate(const QpramMachine& m, int processor,
                          const SolveOptions& opts) {
  if (processor < 0 || processor >= m.q)
    throw PreconditionViolated("processor index out of range");
  if (m.oracle_queries != m.n - 1)
    throw NotFinalized("correlation requires all n-1 oracle queries first");

  const Complex a = m.tableau.at(m.n - 1, m.n - 1);
  const bool consistent = std::abs(a) <= opts.eps_consistency * m.tableau.scale;

  CorrelatedState c;
  if (consistent) {
    c.terms.push_back({OutcomeTag::Zero, CounterTag::C1, Complex(1.0, 0.0)});
  } else {
    const double amp = std::sqrt(0.5);
    c.terms.push_back({OutcomeTag::Zero, CounterTag::C1, Complex(amp, 0.0)});
    c.terms.push_back({OutcomeTag::Ann, CounterTag::C2, Complex(amp, 0.0)});
  }
  return c;
}

CMatrix hamiltonian(OutcomeTag a_label) {
  CMatrix h(4, 4);
  h(0, 0) = 1.0;  // |Zero,C1><Zero,C1|
  if (a_label == OutcomeTag::Ann) h(3, 3) = 1.0;  // |Ann,C2><Ann,C2|
  return h;
}

CMatrix u_c_gate(double tau, OutcomeTag a_label) {
  const CMatrix h = hamiltonian(a_label);
  CMatrix u(4, 4);
  const Complex phase = std::exp(Complex(0.0, -tau));
  for (int k = 0; k < 4; ++k)
    u(k, k) = h(k, k) == Complex(1.0, 0.0) ? phase : Complex(1.0, 0.0);
  return u;
}

double measure_zero_prob(const CorrelatedState& c) {
  double zero_mass = 0.0, total = 0.0;
  for (const CorrelatedTerm& t : c.terms) {
    const double mass = std::norm(t.amplitude);
    total += mass;
    if (t.outcome == OutcomeTag::Zero) zero_mass += mass;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw PreconditionViolated("correlated state must be normalized");
  // The ratio keeps the declared outcome table exact: 1/1 and x/(2x).
  return zero_mass / total;
}

MeasurementRecord sample(const CorrelatedState& c, int shots, std::uint64_t seed) {
  if (shots < 1) throw PreconditionViolated("sampling needs at least one shot");
  const double p = measure_zero_prob(c);
  std::mt19937_64 rng(seed);
  MeasurementRecord r;
  r.shots = shots;
  r.seed = seed;
  for (int s = 0; s < shots; ++s)
    if (uniform01(rng) < p) r.zeros += 1;
  return r;
}

HypothesisReport hypothesis_test(const std::vector<MeasurementRecord>& records) {
  if (records.empty())
    throw PreconditionViolated("hypothesis test needs at least one record");
  for (const MeasurementRecord& r : records)
    if (r.shots != 1)
      throw PreconditionViolated("hypothesis test uses one-shot records only");

  HypothesisReport rep;
  rep.q = static_cast<int>(records.size());
  rep.reject = true;
  for (const MeasurementRecord& r : records)
    if (r.zeros != 1) rep.reject = false;
  rep.type_i_error = std::pow(0.5, rep.q);
  rep.power = 1.0;
  return rep;
}

int power_analysis(double alpha, double power, double p0, double p1) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw PreconditionViolated("alpha must lie in (0, 1)");
  if (!(power > 0.0 && power <= 1.0))
    throw PreconditionViolated("target power must lie in (0, 1]");
  if (!(p0 > 0.0 && p0 < 1.0))
    throw PreconditionViolated("null probability must lie in (0, 1)");
  if (!(p1 > p0 && p1 <= 1.0))
    throw PreconditionViolated("alternative probability must exceed the null");

  constexpr int kMaxQ = 1000000;
  for (int q = 1; q <= kMaxQ; ++q) {
    const double type_i = std::pow(p0, q);
    const double pw = std::pow(p1, q);
    if (pw < power) break;  // monotone decay: no larger q can recover power
    if (type_i <= alpha) return q;
  }
  throw Infeasible("no processor count meets both error targets");
}

}  // namespace qlval
