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

// qlval: truth-value assignment for experimental propositions as
// linear-system solvability, with instrumented work counts, lattice and
// probability consequences, and machine-model cost accounting.
//
// Exit codes: 0 success, 2 parse, 3 dimension, 4 numeric, 5 validation.
// Every error is a single machine-parsable line "E_TAG: message" on stderr.
// Identical inputs and seeds produce byte-identical output.

#include <cstdint>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlval/costmodel.hpp"
#include "qlval/json_io.hpp"
#include "qlval/probability.hpp"
#include "qlval/qpram.hpp"
#include "qlval/sampling.hpp"
#include "qlval/solvability.hpp"
#include "qlval/valuation.hpp"

namespace {

using nlohmann::json;

struct GlobalConfig {
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  int shots = 10000;
  std::string format = "json";
  bool no_pivot = false;
  bool early_exit = false;
  std::vector<std::uint64_t> weights;  // empty or exactly mul,div,add,cmp
};

qlval::Tolerances tolerances(const GlobalConfig& g) {
  qlval::Tolerances t;
  t.eps_tol = g.tolerance;
  return t;
}

qlval::SolveOptions solve_options(const GlobalConfig& g) {
  qlval::SolveOptions o;
  o.eps_tol = g.tolerance;
  o.pivoting = !g.no_pivot;
  o.early_exit = g.early_exit;
  return o;
}

qlval::OpWeights op_weights(const GlobalConfig& g) {
  if (g.weights.empty()) return {};
  if (g.weights.size() != 4)
    throw qlval::ParseError("--weights needs exactly four values: mul,div,add,cmp");
  qlval::OpWeights w{g.weights[0], g.weights[1], g.weights[2], g.weights[3]};
  w.validate();
  return w;
}

// CSV rendering of a flat-ish JSON object: dotted keys, one "key,value" line
// per scalar, keys in the container's (sorted) order.
void flatten_csv(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten_csv(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten_csv(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out << prefix << "," << j.get<std::string>() << "\n";
  } else {
    out << prefix << "," << j.dump() << "\n";
  }
}

void emit(const json& j, const GlobalConfig& g) {
  if (g.format == "csv") {
    std::cout << "key,value\n";
    flatten_csv(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

const char* truth_name(qlval::TruthValue v) {
  switch (v) {
    case qlval::TruthValue::True: return "true";
    case qlval::TruthValue::False: return "false";
    case qlval::TruthValue::Gap: return "gap";
  }
  return "gap";
}

qlval::Semantics parse_semantics(const std::string& s) {
  return s == "bvn" ? qlval::Semantics::BvN : qlval::Semantics::Partial;
}

std::string fmt_double(double v) { return json(v).dump(); }

// ---------------------------------------------------------------------------

int cmd_valuate(const GlobalConfig& g, const std::string& projector_path,
                const std::string& state_path, const std::string& semantics) {
  const qlval::Tolerances tol = tolerances(g);
  const qlval::Projector p =
      qlval::projector_from_matrix(qlval::parse_matrix(qlval::load_json_file(projector_path)), tol);
  const qlval::StateVector psi = qlval::parse_state(qlval::load_json_file(state_path), tol);

  const qlval::Semantics sem = parse_semantics(semantics);
  const qlval::TruthVerdict v = sem == qlval::Semantics::BvN
                                    ? qlval::valuate_bvn(p, psi, solve_options(g))
                                    : qlval::valuate_partial(p, psi, solve_options(g));
  const qlval::OpWeights w = op_weights(g);
  emit(json{{"value", truth_name(v.value)},
            {"semantics", semantics},
            {"x", v.first},
            {"y", v.second},
            {"ops_x", qlval::ops_to_json(v.work_first, w)},
            {"ops_y", qlval::ops_to_json(v.work_second, w)}},
       g);
  return 0;
}

int cmd_compare(const GlobalConfig& g, const std::string& q_path,
                const std::string& p_path, const std::string& semantics) {
  const qlval::Tolerances tol = tolerances(g);
  const qlval::Projector q =
      qlval::projector_from_matrix(qlval::parse_matrix(qlval::load_json_file(q_path)), tol);
  const qlval::Projector p =
      qlval::projector_from_matrix(qlval::parse_matrix(qlval::load_json_file(p_path)), tol);
  const qlval::PropositionPair pair = qlval::make_proposition_pair(q, p, tol);

  const qlval::TruthVerdict v = parse_semantics(semantics) == qlval::Semantics::BvN
                                    ? qlval::comparability_bvn(pair, tol)
                                    : qlval::comparability_partial(pair, tol);
  emit(json{{"value", truth_name(v.value)},
            {"semantics", semantics},
            {"x", v.first},
            {"y", v.second}},
       g);
  return 0;
}

int cmd_lattice_demo(const GlobalConfig& g, int dim, double q_angle_deg) {
  if (dim != 2)
    throw qlval::UnsupportedDim("lattice-demo supports dimension 2 only");
  const qlval::Tolerances tol = tolerances(g);

  const double theta = q_angle_deg * std::numbers::pi / 180.0;
  const qlval::Projector p1 = qlval::projector_from_state(qlval::make_state({1.0, 0.0}, tol));
  const qlval::Projector p2 = qlval::projector_from_state(qlval::make_state({0.0, 1.0}, tol));
  const qlval::Projector q = qlval::projector_from_state(
      qlval::make_state({std::cos(theta), std::sin(theta)}, tol));

  const qlval::DistributivityReport r = qlval::distributivity_witness(q, p1, p2, tol);
  emit(json{{"distributive", r.distributive},
            {"q_angle_deg", q_angle_deg},
            {"lhs", qlval::matrix_to_json(r.lhs.matrix)},
            {"rhs", qlval::matrix_to_json(r.rhs.matrix)}},
       g);
  return 0;
}

int cmd_prob_scan(const GlobalConfig& g, int n, int samples, const std::string& semantics) {
  const qlval::DispersionReport r =
      qlval::dispersion_scan(n, samples, g.seed, parse_semantics(semantics));

  static constexpr const char* kKindNames[] = {"point", "open", "closed"};
  json kinds = json::array();
  json counts = json::object();
  for (size_t k = 0; k < 3; ++k) {
    counts[kKindNames[k]] = r.counts[k];
    if (r.counts[k] > 0) kinds.push_back(kKindNames[k]);
  }
  emit(json{{"n", r.n},
            {"semantics", semantics},
            {"samples", r.samples},
            {"kinds", kinds},
            {"counts", counts}},
       g);
  return 0;
}

int cmd_bench(const GlobalConfig& g, int min_n, int max_n, int factor, int q) {
  if (min_n < 2) throw qlval::PreconditionViolated("bench: --min must be at least 2");
  if (factor < 2) throw qlval::PreconditionViolated("bench: --factor must be at least 2");
  if (max_n < min_n) throw qlval::PreconditionViolated("bench: --max must be >= --min");

  std::vector<int> dims;
  for (long long n = min_n; n <= max_n; n *= factor) dims.push_back(static_cast<int>(n));

  const qlval::OpWeights w = op_weights(g);
  const std::vector<qlval::BenchRow> rows =
      qlval::bench_rows(dims, q, w, solve_options(g));

  auto slope = [&](auto getter) {
    qlval::ScalingSeries s;
    for (const qlval::BenchRow& r : rows)
      s.points.push_back({r.n, static_cast<double>(getter(r))});
    return qlval::growth_exponent(s);
  };
  const double s_work_x = slope([](const qlval::BenchRow& r) { return r.work_x; });
  const double s_work_y = slope([](const qlval::BenchRow& r) { return r.work_y; });
  const double s_pram = slope([](const qlval::BenchRow& r) { return r.cost_pram_y; });
  const double s_qpram = slope([](const qlval::BenchRow& r) { return r.cost_qpram_y; });
  const double s_eff = slope([](const qlval::BenchRow& r) { return r.eff_qpram; });
  // Sequential range cost equals its work (one processor), so the growth
  // relation compares the work_x slope against the coprocessor cost slope.
  const bool equal = qlval::equal_growth(s_work_x, s_qpram);

  if (g.format == "csv") {
    std::cout << "n,work_x,work_y,cost_pram_y,cost_qpram_y,eff_qpram\n";
    for (const qlval::BenchRow& r : rows)
      std::cout << r.n << "," << r.work_x << "," << r.work_y << "," << r.cost_pram_y
                << "," << r.cost_qpram_y << "," << fmt_double(r.eff_qpram) << "\n";
    std::cout << "# slopes work_x=" << fmt_double(s_work_x)
              << " work_y=" << fmt_double(s_work_y)
              << " cost_pram_y=" << fmt_double(s_pram)
              << " cost_qpram_y=" << fmt_double(s_qpram)
              << " eff_qpram=" << fmt_double(s_eff)
              << " equal_growth=" << (equal ? "true" : "false") << "\n";
  } else {
    json jrows = json::array();
    for (const qlval::BenchRow& r : rows)
      jrows.push_back(json{{"n", r.n},
                           {"work_x", r.work_x},
                           {"work_y", r.work_y},
                           {"cost_pram_y", r.cost_pram_y},
                           {"cost_qpram_y", r.cost_qpram_y},
                           {"eff_qpram", r.eff_qpram}});
    emit(json{{"rows", jrows},
              {"slopes",
               json{{"work_x", s_work_x},
                    {"work_y", s_work_y},
                    {"cost_pram_y", s_pram},
                    {"cost_qpram_y", s_qpram},
                    {"eff_qpram", s_eff}}},
              {"equal_growth", equal}},
         g);
  }
  return 0;
}

int cmd_qpram(const GlobalConfig& g, const std::string& projector_path,
              const std::string& state_path, int q) {
  const qlval::Tolerances tol = tolerances(g);
  const qlval::Projector p =
      qlval::projector_from_matrix(qlval::parse_matrix(qlval::load_json_file(projector_path)), tol);
  const qlval::StateVector psi = qlval::parse_state(qlval::load_json_file(state_path), tol);
  if (g.shots < 1) throw qlval::PreconditionViolated("--shots must be at least 1");

  const qlval::SolveOptions opts = solve_options(g);
  qlval::QpramMachine m = qlval::init_machine(p, psi, q, opts);
  while (m.oracle_queries < m.n - 1) m = qlval::oracle_step(std::move(m), opts);

  long long zeros = 0;
  bool consistent = true;
  for (int k = 0; k < m.q; ++k) {
    const qlval::CorrelatedState c = qlval::correlate(m, k, opts);
    consistent = c.terms.size() == 1;
    const qlval::MeasurementRecord est =
        qlval::sample(c, g.shots, qlval::derive_seed(g.seed, static_cast<std::uint64_t>(k), 0));
    zeros += est.zeros;
    m.records.push_back(
        qlval::sample(c, 1, qlval::derive_seed(g.seed, static_cast<std::uint64_t>(k), 1)));
  }
  const long long total_shots = static_cast<long long>(m.q) * g.shots;
  const qlval::HypothesisReport ht = qlval::hypothesis_test(m.records);

  emit(json{{"n", m.n},
            {"q", m.q},
            {"consistent", consistent},
            {"pr_zero", static_cast<double>(zeros) / static_cast<double>(total_shots)},
            {"shots", total_shots},
            {"zeros", zeros},
            {"reject_h0", ht.reject},
            {"type_i_error", ht.type_i_error}},
       g);
  return 0;
}

int exit_code_for(const qlval::Error& e) {
  switch (e.kind()) {
    case qlval::ErrorKind::Parse: return 2;
    case qlval::ErrorKind::Dimension: return 3;
    case qlval::ErrorKind::Numeric: return 4;
    case qlval::ErrorKind::Validation: return 5;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truth values for experimental propositions via linear-system solvability"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  GlobalConfig g;
  app.add_option("--tolerance", g.tolerance, "entrywise comparison tolerance")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--shots", g.shots, "measurement shots per coprocessor")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--no-pivot", g.no_pivot, "run the literal elimination without row swaps");
  app.add_flag("--early-exit", g.early_exit,
               "stop the elimination once the active block is all zero");
  app.add_option("--weights", g.weights, "operation weights mul,div,add,cmp")
      ->delimiter(',');

  std::string projector_path, state_path, second_path;
  std::string semantics = "partial";

  CLI::App* valuate = app.add_subcommand("valuate", "truth value of a proposition for a state");
  valuate->add_option("projector", projector_path, "projector JSON file")->required();
  valuate->add_option("state", state_path, "state JSON file")->required();
  valuate->add_option("--semantics", semantics, "partial or bvn")
      ->check(CLI::IsMember({"partial", "bvn"}))
      ->capture_default_str();

  CLI::App* compare = app.add_subcommand("compare", "comparability of two propositions");
  compare->add_option("first", projector_path, "first projector JSON file")->required();
  compare->add_option("second", second_path, "second projector JSON file")->required();
  compare->add_option("--semantics", semantics, "partial or bvn")
      ->check(CLI::IsMember({"partial", "bvn"}))
      ->capture_default_str();

  int dim = 2;
  double q_angle = 45.0;
  CLI::App* lattice = app.add_subcommand("lattice-demo", "qubit distributivity probe");
  lattice->add_option("--dim", dim, "dimension (2 only)")->capture_default_str();
  lattice->add_option("--q-angle", q_angle, "angle of q's defining state, degrees")
      ->capture_default_str();

  int scan_n = 2, scan_samples = 200;
  std::string scan_semantics = "bvn";
  CLI::App* prob = app.add_subcommand("prob-scan", "dispersion scan over random families");
  prob->add_option("--n", scan_n, "family dimension")->required();
  prob->add_option("--samples", scan_samples, "number of samples")->capture_default_str();
  prob->add_option("--semantics", scan_semantics, "partial or bvn")
      ->check(CLI::IsMember({"partial", "bvn"}))
      ->capture_default_str();

  int bench_min = 8, bench_max = 128, bench_factor = 2, bench_q = 3;
  CLI::App* bench = app.add_subcommand("bench", "instrumented scaling table");
  bench->add_option("--min", bench_min, "smallest dimension")->capture_default_str();
  bench->add_option("--max", bench_max, "largest dimension")->capture_default_str();
  bench->add_option("--factor", bench_factor, "dimension growth factor")->capture_default_str();
  bench->add_option("--q", bench_q, "oracle coprocessor count")->capture_default_str();

  int qpram_q = 3;
  CLI::App* qpram = app.add_subcommand("qpram", "oracle-coprocessor kernel decision");
  qpram->add_option("projector", projector_path, "projector JSON file")->required();
  qpram->add_option("state", state_path, "state JSON file")->required();
  qpram->add_option("--q", qpram_q, "oracle coprocessor count")->capture_default_str();

  try {
    app.parse(argc, argv);

    if (valuate->parsed()) return cmd_valuate(g, projector_path, state_path, semantics);
    if (compare->parsed()) return cmd_compare(g, projector_path, second_path, semantics);
    if (lattice->parsed()) return cmd_lattice_demo(g, dim, q_angle);
    if (prob->parsed()) return cmd_prob_scan(g, scan_n, scan_samples, scan_semantics);
    if (bench->parsed()) return cmd_bench(g, bench_min, bench_max, bench_factor, bench_q);
    if (qpram->parsed()) return cmd_qpram(g, projector_path, state_path, qpram_q);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "E_PARSE: " << e.what() << "\n";
    return 2;
  } catch (const qlval::Error& e) {
    std::cerr << e.code() << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "E_INTERNAL: " << e.what() << "\n";
    return 1;
  }
}
