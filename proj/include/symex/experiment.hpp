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


#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symex/hubbard.hpp"
#include "symex/noise.hpp"
#include "symex/symmetry_set.hpp"

namespace symex {

/// Subsets of {I, G_up, G_down, G_tot} are bit masks in that element order.
/// Names: "unmit" = {I}, "ver-full" = whole group, "ver-{x}" = {I, x},
/// "exp-{a,b,...}" for every other subset.
std::string scheme_name(std::uint64_t mask);
std::uint64_t parse_scheme(const std::string& name);
/// All fifteen non-empty subsets, groups first.
std::vector<std::string> all_scheme_names();
bool scheme_is_group(std::uint64_t mask);

struct ExperimentConfig {
  LatticeSpec lattice;
  NoiseKind noise = NoiseKind::Depolarising2Q;
  std::vector<double> mu_grid{0.0, 0.5, 1.0, 1.5, 2.0};
  std::vector<std::uint64_t> seeds;
  double energy_threshold = 0.5;
  std::vector<std::string> schemes{"unmit", "ver-full", "exp-{down,tot}"};
  std::filesystem::path output_dir = "out";
  std::size_t layers = 5;
  std::size_t workers = 1;

  /// Throws InvalidConfig on a bad grid, duplicate seeds or unknown schemes.
  void validate() const;

  static ExperimentConfig from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;
};

ExperimentConfig load_config(const std::filesystem::path& path);

/// Seeds first..first+count-1.
std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t count);

struct ResultRow {
  std::string scheme;
  double mu = 0.0;
  std::uint64_t seed = 0;
  double gamma = 0.0;
  double eps_h = 0.0;
  double eps_rho0 = 0.0;
  double b_undet = 0.0;
  double b_det = 0.0;
  double cost = 0.0;
  double energy0 = 0.0;  ///< ideal energy of the traceless Hamiltonian
};

struct SweepLog {
  std::vector<std::uint64_t> accepted;
  std::vector<std::uint64_t> rejected;
  std::vector<std::string> skipped;  ///< scheme/mu/seed cells with <Gamma> <= 0
};

/// Builds one circuit per seed, keeps it when |E0| > energy_threshold and
/// evaluates every scheme at every mu. Rows come back sorted by (scheme order
/// in the config, mu, seed). Throws AllSeedsFiltered.
std::vector<ResultRow> run_sweep(const ExperimentConfig& config, SweepLog* log = nullptr);

void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path);
std::vector<ResultRow> parse_csv(const std::filesystem::path& path);

/// Three panels (|eps(H)|, |eps(rho0)|, cost) against mu: seed means as
/// polylines, min/max across seeds as shaded bands, groups solid and other
/// schemes dashed.
void emit_curves(const std::vector<ResultRow>& rows, const std::filesystem::path& path);

struct TableCheck {
  std::string label;
  double value = 0.0;
  double reference = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool checked = false;  ///< false for rows shown for comparison only
  bool pass = true;
};

struct TableReport {
  std::vector<TableCheck> checks;
  std::size_t accepted_seeds = 0;
  bool all_pass() const;
};

/// Runs the sweep at mu = 1 and 2 and compares against the published tables.
TableReport reproduce_tables(const ExperimentConfig& config);
TableReport tables_from_rows(const std::vector<ResultRow>& rows, NoiseKind noise,
                             const LatticeSpec& lattice);
void print_tables(const TableReport& report, std::ostream& out);

/// Seed-mean helper: averages `field` over rows of one scheme and mu.
double seed_mean(const std::vector<ResultRow>& rows, const std::string& scheme, double mu,
                 double ResultRow::*field);

}  // namespace symex
