// Copyright 2026 The symex Authors
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


// symex command line: sweeps, curves, tables, scheme search and small demos.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "symex/analytic.hpp"
#include "symex/distillation.hpp"
#include "symex/errors.hpp"
#include "symex/experiment.hpp"
#include "symex/hubbard.hpp"
#include "symex/shots.hpp"
#include "symex/simulator.hpp"
#include "symex/symmetry.hpp"

namespace fs = std::filesystem;
using namespace symex;

namespace {

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count;
  std::vector<double> mu;
  std::string lattice;
  std::string noise;
  std::string out;
  std::vector<std::string> schemes;
  std::optional<std::size_t> workers;
  bool large = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "first seed");
  cmd->add_option("--seeds", o.count, "number of consecutive seeds");
  cmd->add_option("--mu", o.mu, "mu grid, comma separated")->delimiter(',');
  cmd->add_option("--lattice", o.lattice, "2x2 or 2x3");
  cmd->add_option("--noise", o.noise, "depolarising or bitflip");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--schemes", o.schemes, "scheme names, or 'all'")->delimiter(';');
  cmd->add_option("-j,--workers", o.workers, "worker threads");
  cmd->add_flag("--large", o.large, "allow the 12-qubit lattice");
}

ExperimentConfig resolve(const Overrides& o) {
  ExperimentConfig c;
  c.seeds = seed_range(1, 20);
  if (!o.config.empty()) c = load_config(o.config);
  if (!o.lattice.empty()) {
    const LatticeSpec l = LatticeSpec::parse(o.lattice);
    c.lattice.rows = l.rows;
    c.lattice.cols = l.cols;
  }
  if (!o.noise.empty()) c.noise = parse_noise_kind(o.noise);
  if (!o.mu.empty()) c.mu_grid = o.mu;
  if (o.seed || o.count) {
    c.seeds = seed_range(o.seed.value_or(c.seeds.front()), o.count.value_or(c.seeds.size()));
  }
  if (!o.out.empty()) c.output_dir = o.out;
  if (!o.schemes.empty()) {
    c.schemes = o.schemes.size() == 1 && o.schemes[0] == "all" ? all_scheme_names() : o.schemes;
  }
  if (o.workers) c.workers = *o.workers;
  if (c.lattice.num_qubits() > 8 && !o.large) {
    throw Error(ErrorKind::InvalidConfig,
                fmt::format("lattice {} needs --large", c.lattice.str()));
  }
  c.validate();
  return c;
}

void report_log(const SweepLog& log) {
  fmt::print(std::cerr, "accepted {} seeds, rejected {}", log.accepted.size(),
             log.rejected.size());
  if (!log.rejected.empty()) {
    fmt::print(std::cerr, " (");
    for (std::size_t i = 0; i < log.rejected.size(); ++i) {
      fmt::print(std::cerr, "{}{}", i ? " " : "", log.rejected[i]);
    }
    fmt::print(std::cerr, ")");
  }
  fmt::print(std::cerr, "\n");
  for (const auto& s : log.skipped) fmt::print(std::cerr, "skipped {}: <Gamma> <= 0\n", s);
}

std::vector<ResultRow> sweep(const ExperimentConfig& c) {
  SweepLog log;
  auto rows = run_sweep(c, &log);
  report_log(log);
  return rows;
}

int cmd_simulate(const Overrides& o) {
  const auto c = resolve(o);
  fs::create_directories(c.output_dir);
  const auto rows = sweep(c);
  const fs::path csv = c.output_dir / "rows.csv";
  emit_csv(rows, csv);
  fmt::print("{} rows -> {}\n", rows.size(), csv.string());
  return 0;
}

int cmd_curves(const Overrides& o, const std::string& csv_in) {
  const auto c = resolve(o);
  fs::create_directories(c.output_dir);
  const auto rows = csv_in.empty() ? sweep(c) : parse_csv(csv_in);
  const fs::path svg = c.output_dir / "curves.svg";
  emit_curves(rows, svg);
  fmt::print("wrote {}\n", svg.string());
  return 0;
}

int cmd_tables(const Overrides& o) {
  const auto c = resolve(o);
  const auto report = reproduce_tables(c);
  print_tables(report, std::cout);
  return report.all_pass() ? 0 : 2;
}

std::string element_label(const HubbardSymmetries& s, const PauliString& p) {
  if (p.weight() == 0) return "I";
  if (p == s.g_up) return "up";
  if (p == s.g_down) return "down";
  if (p == s.g_tot) return "tot";
  return p.str();
}

int cmd_search(const Overrides& o, const std::string& mode_name, std::optional<double> delta) {
  auto c = resolve(o);
  const auto syms = symmetries(c.lattice);
  const SymmetrySet group = syms.group();
  const double mu = c.mu_grid.size() == 1 ? c.mu_grid.front() : 1.0;
  const auto fractions = detectable_fractions(c.noise, c.lattice);

  SearchMode mode = SearchMode::Analytic;
  std::optional<std::map<PauliString, double>> measured;
  if (mode_name == "measured") {
    mode = SearchMode::Measured;
    const Observable energy = energy_observable(c.lattice);
    std::map<PauliString, double> sums;
    std::size_t n = 0;
    for (auto seed : c.seeds) {
      const auto circuit = build_circuit(c.lattice, c.layers, seed);
      if (!(std::abs(ideal_state(circuit).expect(energy)) > c.energy_threshold)) continue;
      const auto sim = simulate(circuit, c.noise, mu);
      for (const auto& g : group.elements()) sums[g] += expect(sim.rho, Observable(g));
      ++n;
    }
    if (n == 0) throw Error(ErrorKind::AllSeedsFiltered, "no seed passes the energy filter");
    for (auto& [g, v] : sums) v /= static_cast<double>(n);
    measured = sums;
  } else if (mode_name != "analytic") {
    throw Error(ErrorKind::InvalidArgument, "mode must be analytic or measured");
  }

  const auto res = search_small_bias(group, fractions, mu, delta, mode, measured);
  auto labels = [&](const SymmetrySet& set) {
    std::vector<std::string> out;
    for (const auto& p : set.elements()) out.push_back(element_label(syms, p));
    return out;
  };
  nlohmann::json doc;
  doc["lattice"] = c.lattice.str();
  doc["noise"] = std::string(to_string(c.noise));
  doc["mu"] = mu;
  doc["mode"] = mode_name;
  doc["delta"] = res.delta;
  doc["threshold_set"] = labels(res.threshold_set);
  doc["chosen"] = labels(res.chosen);
  doc["predicted_bias"] = res.predicted_bias;
  doc["predicted_cost"] = res.predicted_cost;
  for (const auto& cand : res.candidate_sets) {
    doc["candidates"].push_back(
        {{"set", labels(cand.set)}, {"objective", cand.objective}, {"gamma", cand.gamma}});
  }
  std::cout << doc.dump(2) << '\n';
  return 0;
}

int cmd_vd(double eps, std::size_t copies) {
  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(2, 2);
  sigma(0, 0) = 1.0 - eps;
  sigma(1, 1) = eps;
  const CopySpec spec{DensityOperator(1, sigma), PureState::basis(1, 0), copies};
  fmt::print("{:>3} {:>14} {:>14}\n", "m", "1-F_cycle", "closed form");
  for (std::size_t m = 1; m <= copies; ++m) {
    const double closed = std::pow(eps, m) / (std::pow(1 - eps, m) + std::pow(eps, m));
    fmt::print("{:>3} {:>14.6e} {:>14.6e}\n", m, 1.0 - cycle_fidelity(spec, m), closed);
  }
  fmt::print("best cycle order: {}\n", optimal_weight_claim(spec));
  fmt::print("1-F_verification (M={}): {:.6e}\n", copies, 1.0 - verification_fidelity(spec));
  for (const auto& [len, count] : equivalence_classes_sm(copies)) {
    fmt::print("cycle length {}: {} permutations\n", len, count);
  }
  return 0;
}

int cmd_shots(std::size_t shots, std::size_t trials, std::uint64_t seed) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m.diagonal() << 0.4, 0.1, 0.1, 0.4;
  const DensityOperator rho(2, m);
  const PauliString obs = PauliString::parse("ZI");
  const SymmetrySet group({PauliString::parse("II"), PauliString::parse("ZZ")});
  const auto scheme = ExpansionScheme::uniform(group);
  const double o = expect(rho, Observable(obs));
  const double gamma = gamma_expect(rho, scheme);
  const double pi = (1.0 + expect(rho, Observable(PauliString::parse("ZZ")))) / 2.0;
  const double unmit_var = 1.0 - o * o;

  fmt::print("{:<12} {:>12} {:>12} {:>7} {:>10} {:>10}\n", "estimator", "emp var", "pred var",
             "|z|", "cost", "expected");
  for (auto est : {Estimator::Expansion, Estimator::DirectVerification}) {
    const auto rep = verify_cost_formulas(rho, scheme, obs, shots, trials, seed, est);
    const double cost = rep.empirical_var * static_cast<double>(shots) / unmit_var;
    const bool expansion = est == Estimator::Expansion;
    fmt::print("{:<12} {:>12.4e} {:>12.4e} {:>7.3f} {:>10.4f} {:>10.4f}\n",
               expansion ? "expansion" : "direct", rep.empirical_var, rep.predicted_var,
               rep.z_score, cost, expansion ? 1.0 / (gamma * gamma) : 1.0 / pi);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symex: symmetry-expansion error mitigation experiments"};
  app.require_subcommand(1);

  Overrides o;
  auto* simulate_cmd = app.add_subcommand("simulate", "run a sweep and write rows.csv");
  add_common(simulate_cmd, o);

  std::string csv_in;
  auto* curves_cmd = app.add_subcommand("curves", "write curves.svg");
  add_common(curves_cmd, o);
  curves_cmd->add_option("--csv", csv_in, "plot an existing rows.csv")->check(CLI::ExistingFile);

  auto* tables_cmd = app.add_subcommand("tables", "compare mu=1,2 against the reference tables");
  add_common(tables_cmd, o);

  std::string mode = "analytic";
  std::optional<double> delta;
  auto* search_cmd = app.add_subcommand("search", "small-bias scheme search, JSON output");
  add_common(search_cmd, o);
  search_cmd->add_option("--mode", mode, "analytic or measured")
      ->check(CLI::IsMember({"analytic", "measured"}));
  search_cmd->add_option("--delta", delta, "threshold tolerance");

  double eps = 0.1;
  std::size_t copies = 2;
  auto* vd_cmd = app.add_subcommand("vd", "virtual distillation on diag(1-eps, eps)");
  vd_cmd->add_option("--eps", eps, "error probability")->check(CLI::Range(0.0, 0.5));
  vd_cmd->add_option("-M,--copies", copies, "number of copies")->check(CLI::Range(1, 6));

  std::size_t shots = 10000, trials = 200;
  std::uint64_t shot_seed = 1;
  auto* shots_cmd = app.add_subcommand("shots", "check the variance formulas by sampling");
  shots_cmd->add_option("-n,--shots", shots, "shots per trial")->check(CLI::PositiveNumber);
  shots_cmd->add_option("-t,--trials", trials, "trials")->check(CLI::Range(2, 100000));
  shots_cmd->add_option("--seed", shot_seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate_cmd) return cmd_simulate(o);
    if (*curves_cmd) return cmd_curves(o, csv_in);
    if (*tables_cmd) return cmd_tables(o);
    if (*search_cmd) return cmd_search(o, mode, delta);
    if (*vd_cmd) return cmd_vd(eps, copies);
    if (*shots_cmd) return cmd_shots(shots, trials, shot_seed);
  } catch (const Error& e) {
    fmt::print(std::cerr, "error [{}]: {}\n", to_string(e.kind()), e.what());
    return 1;
  } catch (const std::exception& e) {
    fmt::print(std::cerr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
