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


#include "symex/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "symex/analytic.hpp"
#include "symex/errors.hpp"
#include "symex/simulator.hpp"
#include "symex/symmetry.hpp"

namespace symex {
namespace {

constexpr const char* kElementNames[] = {"I", "up", "down", "tot"};
constexpr const char* kCsvHeader =
    "scheme,mu,seed,gamma,eps_H,eps_rho0,b_undet,b_det,cost,energy0";

std::string expanded_scheme_for(NoiseKind kind) {
  return kind == NoiseKind::Depolarising2Q ? "exp-{down,tot}" : "exp-{down}";
}

std::vector<double> distinct_mus(const std::vector<ResultRow>& rows) {
  std::set<double> mus;
  for (const auto& r : rows) mus.insert(r.mu);
  return {mus.begin(), mus.end()};
}

std::vector<std::string> schemes_in_order(const std::vector<ResultRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    if (std::find(out.begin(), out.end(), r.scheme) == out.end()) out.push_back(r.scheme);
  }
  return out;
}

}  // namespace

std::string scheme_name(std::uint64_t mask) {
  if (mask == 0 || mask > 15) {
    throw Error(ErrorKind::InvalidArgument, "scheme mask must be in [1, 15]");
  }
  if (mask == 1) return "unmit";
  if (mask == 15) return "ver-full";
  if (scheme_is_group(mask)) {
    for (int i = 1; i < 4; ++i) {
      if (mask & (1u << i)) return std::string("ver-{") + kElementNames[i] + "}";
    }
  }
  std::string out = "exp-{";
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (!(mask & (1u << i))) continue;
    if (!first) out += ",";
    out += kElementNames[i];
    first = false;
  }
  return out + "}";
}

std::uint64_t parse_scheme(const std::string& name) {
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    if (scheme_name(mask) == name) return mask;
  }
  throw Error(ErrorKind::InvalidConfig, "unknown scheme '" + name + "'");
}

bool scheme_is_group(std::uint64_t mask) {
  return mask == 1 || mask == 3 || mask == 5 || mask == 9 || mask == 15;
}

std::vector<std::string> all_scheme_names() {
  std::vector<std::string> out;
  for (std::uint64_t mask : {1, 15, 3, 5, 9}) out.push_back(scheme_name(mask));
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    if (!scheme_is_group(mask)) out.push_back(scheme_name(mask));
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (mu_grid.empty()) throw Error(ErrorKind::InvalidConfig, "mu grid is empty");
  for (std::size_t i = 0; i < mu_grid.size(); ++i) {
    if (!(mu_grid[i] >= 0.0)) throw Error(ErrorKind::InvalidConfig, "mu must be >= 0");
    if (i > 0 && !(mu_grid[i] > mu_grid[i - 1])) {
      throw Error(ErrorKind::InvalidConfig, "mu grid must be strictly ascending");
    }
  }
  if (seeds.empty()) throw Error(ErrorKind::InvalidConfig, "no seeds given");
  std::set<std::uint64_t> unique(seeds.begin(), seeds.end());
  if (unique.size() != seeds.size()) {
    throw Error(ErrorKind::InvalidConfig, "seeds must be distinct");
  }
  if (schemes.empty()) throw Error(ErrorKind::InvalidConfig, "no schemes given");
  for (const auto& s : schemes) parse_scheme(s);
  if (lattice.rows == 0 || lattice.cols == 0) {
    throw Error(ErrorKind::InvalidConfig, "lattice needs at least one site");
  }
  if (layers == 0) throw Error(ErrorKind::InvalidConfig, "layers must be positive");
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& doc) {
  ExperimentConfig c;
  try {
    if (doc.contains("lattice")) c.lattice = LatticeSpec::parse(doc["lattice"].get<std::string>());
    c.lattice.t = doc.value("t", 1.0);
    c.lattice.u = doc.value("u", 2.0);
    if (doc.contains("noise")) c.noise = parse_noise_kind(doc["noise"].get<std::string>());
    if (doc.contains("mu")) c.mu_grid = doc["mu"].get<std::vector<double>>();
    if (doc.contains("seeds")) {
      const auto& s = doc["seeds"];
      if (s.is_object()) {
        c.seeds = seed_range(s.value("first", std::uint64_t{1}), s.at("count").get<std::size_t>());
      } else {
        c.seeds = s.get<std::vector<std::uint64_t>>();
      }
    } else {
      c.seeds = seed_range(1, 20);
    }
    c.energy_threshold = doc.value("energy_threshold", 0.5);
    if (doc.contains("schemes")) {
      const auto& s = doc["schemes"];
      c.schemes = s.is_string() && s.get<std::string>() == "all"
                      ? all_scheme_names()
                      : s.get<std::vector<std::string>>();
    }
    c.output_dir = doc.value("output_dir", std::string("out"));
    c.layers = doc.value("layers", std::size_t{5});
    c.workers = doc.value("workers", std::size_t{1});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, e.what());
  }
  c.validate();
  return c;
}

nlohmann::json ExperimentConfig::to_json() const {
  return {{"lattice", lattice.str()},
          {"t", lattice.t},
          {"u", lattice.u},
          {"noise", std::string(to_string(noise))},
          {"mu", mu_grid},
          {"seeds", seeds},
          {"energy_threshold", energy_threshold},
          {"schemes", schemes},
          {"output_dir", output_dir.string()},
          {"layers", layers},
          {"workers", workers}};
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, path.string() + ": " + e.what());
  }
  return ExperimentConfig::from_json(doc);
}

std::vector<std::uint64_t> seed_range(std::uint64_t first, std::size_t count) {
  std::vector<std::uint64_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

std::vector<ResultRow> run_sweep(const ExperimentConfig& config, SweepLog* log) {
  config.validate();
  const SymmetrySet group = symmetries(config.lattice).group();
  const Observable energy = energy_observable(config.lattice);
  std::vector<std::uint64_t> masks;
  for (const auto& s : config.schemes) masks.push_back(parse_scheme(s));

  struct SeedResult {
    bool accepted = false;
    std::vector<ResultRow> rows;
    std::vector<std::string> skipped;
  };
  std::vector<SeedResult> per_seed(config.seeds.size());

  auto work = [&](std::size_t idx) {
    const std::uint64_t seed = config.seeds[idx];
    const NoisyCircuit circuit = build_circuit(config.lattice, config.layers, seed);
    const double e0 = ideal_state(circuit).expect(energy);
    SeedResult& out = per_seed[idx];
    if (!(std::abs(e0) > config.energy_threshold)) return;
    out.accepted = true;
    for (double mu : config.mu_grid) {
      const SimulationResult sim = simulate(circuit, config.noise, mu);
      for (std::size_t s = 0; s < masks.size(); ++s) {
        const auto scheme = ExpansionScheme::uniform(group.subset(masks[s]));
        try {
          const SchemeReport rep = scheme_report(sim, scheme, group, energy);
          out.rows.push_back({config.schemes[s], mu, seed, rep.gamma_expect,
                              std::abs(rep.rel_bias_obs), rep.abs_infidelity, rep.b_undet,
                              rep.b_det, rep.cost, e0});
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NonPositiveGamma) throw;
          out.skipped.push_back(fmt::format("{} mu={} seed={}", config.schemes[s], mu, seed));
        }
      }
    }
  };

  const std::size_t workers =
      std::max<std::size_t>(1, std::min(config.workers, config.seeds.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < config.seeds.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < config.seeds.size(); i = next++) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<ResultRow> rows;
  SweepLog local;
  for (std::size_t i = 0; i < per_seed.size(); ++i) {
    auto& r = per_seed[i];
    (r.accepted ? local.accepted : local.rejected).push_back(config.seeds[i]);
    rows.insert(rows.end(), r.rows.begin(), r.rows.end());
    local.skipped.insert(local.skipped.end(), r.skipped.begin(), r.skipped.end());
  }
  if (local.accepted.empty()) {
    throw Error(ErrorKind::AllSeedsFiltered,
                fmt::format("no seed passes |E0| > {}", config.energy_threshold));
  }
  std::map<std::string, std::size_t> order;
  for (std::size_t s = 0; s < config.schemes.size(); ++s) order.emplace(config.schemes[s], s);
  std::stable_sort(rows.begin(), rows.end(), [&](const ResultRow& a, const ResultRow& b) {
    const auto oa = order.at(a.scheme), ob = order.at(b.scheme);
    if (oa != ob) return oa < ob;
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.seed < b.seed;
  });
  if (log) *log = std::move(local);
  return rows;
}

void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "no rows to write");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    fmt::print(out, "{},{:.6g},{},{:.6g},{:.6g},{:.6g},{:.6g},{:.6g},{:.6g},{:.6g}\n",
               r.scheme, r.mu, r.seed, r.gamma, r.eps_h, r.eps_rho0, r.b_undet, r.b_det,
               r.cost, r.energy0);
  }
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

std::vector<ResultRow> parse_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorKind::InvalidConfig, path.string() + ": unexpected CSV header");
  }
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // Scheme names contain commas inside braces, so split outside braces only.
    std::vector<std::string> cells;
    std::string cell;
    int depth = 0;
    for (char ch : line) {
      if (ch == '{') ++depth;
      if (ch == '}') --depth;
      if (ch == ',' && depth == 0) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell.push_back(ch);
      }
    }
    cells.push_back(cell);
    if (cells.size() != 10) {
      throw Error(ErrorKind::InvalidConfig, "CSV row has " + std::to_string(cells.size()) + " cells");
    }
    try {
      rows.push_back({cells[0], std::stod(cells[1]), std::stoull(cells[2]), std::stod(cells[3]),
                      std::stod(cells[4]), std::stod(cells[5]), std::stod(cells[6]),
                      std::stod(cells[7]), std::stod(cells[8]), std::stod(cells[9])});
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidConfig, "bad number in CSV row: " + line);
    }
  }
  return rows;
}

void emit_curves(const std::vector<ResultRow>& rows, const std::filesystem::path& path) {
  const auto schemes = schemes_in_order(rows);
  if (schemes.empty()) throw Error(ErrorKind::InvalidArgument, "no schemes to plot");
  const auto mus = distinct_mus(rows);
  if (mus.size() < 2) throw Error(ErrorKind::InvalidArgument, "curves need at least two mu values");

  struct Panel {
    const char* title;
    double ResultRow::*field;
  };
  const Panel panels[] = {{"|eps(H)|", &ResultRow::eps_h},
                          {"|eps(rho0)|", &ResultRow::eps_rho0},
                          {"cost", &ResultRow::cost}};
  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  constexpr double pw = 360, ph = 280, ml = 55, mt = 30, gap = 40;
  const double width = 3 * (ml + pw) + 2 * gap + 20;
  const double height = mt + ph + 60 + 18.0 * static_cast<double>(schemes.size());

  std::ostringstream svg;
  fmt::print(svg,
             "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" "
             "font-family=\"sans-serif\" font-size=\"11\">\n",
             width, height);
  fmt::print(svg, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

  for (int p = 0; p < 3; ++p) {
    const Panel& panel = panels[p];
    struct Stats {
      double mean, lo, hi;
    };
    std::map<std::string, std::vector<Stats>> stats;
    double ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const auto& s : schemes) {
      for (double mu : mus) {
        double sum = 0.0, lo = 0.0, hi = 0.0;
        std::size_t n = 0;
        for (const auto& r : rows) {
          if (r.scheme != s || r.mu != mu) continue;
          const double v = r.*(panel.field);
          lo = n == 0 ? v : std::min(lo, v);
          hi = n == 0 ? v : std::max(hi, v);
          sum += v;
          ++n;
        }
        if (n == 0) {
          stats[s].push_back({std::nan(""), 0, 0});
          continue;
        }
        stats[s].push_back({sum / static_cast<double>(n), lo, hi});
        ymin = first ? lo : std::min(ymin, lo);
        ymax = first ? hi : std::max(ymax, hi);
        first = false;
      }
    }
    if (panel.field == &ResultRow::cost) ymin = std::min(ymin, 1.0);
    if (ymax - ymin < 1e-12) ymax = ymin + 1.0;
    const double x0 = 10 + p * (ml + pw + gap) + ml;
    const auto sx = [&](double mu) { return x0 + (mu - mus.front()) / (mus.back() - mus.front()) * pw; };
    const auto sy = [&](double v) { return mt + ph - (v - ymin) / (ymax - ymin) * ph; };

    fmt::print(svg, "<g>\n<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n",
               x0 + pw / 2, mt - 10, panel.title);
    fmt::print(svg,
               "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n"
               "<line x1=\"{0:.1f}\" y1=\"{3:.1f}\" x2=\"{0:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n",
               x0, mt + ph, x0 + pw, mt);
    for (int k = 0; k <= 4; ++k) {
      const double v = ymin + (ymax - ymin) * k / 4.0;
      fmt::print(svg, "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.3g}</text>\n",
                 x0 - 4, sy(v) + 4, v);
    }
    for (double mu : mus) {
      fmt::print(svg, "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:g}</text>\n",
                 sx(mu), mt + ph + 14, mu);
    }
    fmt::print(svg, "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">mu</text>\n",
               x0 + pw / 2, mt + ph + 30);

    for (std::size_t s = 0; s < schemes.size(); ++s) {
      const auto& st = stats[schemes[s]];
      const char* colour = palette[s % std::size(palette)];
      std::string upper, lower, line;
      for (std::size_t i = 0; i < mus.size(); ++i) {
        if (std::isnan(st[i].mean)) continue;
        upper += fmt::format("{:.2f},{:.2f} ", sx(mus[i]), sy(st[i].hi));
        line += fmt::format("{:.2f},{:.2f} ", sx(mus[i]), sy(st[i].mean));
      }
      for (std::size_t i = mus.size(); i-- > 0;) {
        if (std::isnan(st[i].mean)) continue;
        lower += fmt::format("{:.2f},{:.2f} ", sx(mus[i]), sy(st[i].lo));
      }
      fmt::print(svg, "<polygon points=\"{}{}\" fill=\"{}\" fill-opacity=\"0.15\" stroke=\"none\"/>\n",
                 upper, lower, colour);
      const bool solid = scheme_is_group(parse_scheme(schemes[s]));
      fmt::print(svg, "<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.8\"{}/>\n",
                 line, colour, solid ? "" : " stroke-dasharray=\"6,4\"");
    }
    svg << "</g>\n";
  }

  for (std::size_t s = 0; s < schemes.size(); ++s) {
    const double y = mt + ph + 50 + 18.0 * static_cast<double>(s);
    const bool solid = scheme_is_group(parse_scheme(schemes[s]));
    fmt::print(svg,
               "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"{3}\" "
               "stroke-width=\"1.8\"{4}/>\n<text x=\"{5:.1f}\" y=\"{6:.1f}\">{7}</text>\n",
               10 + ml, y, 40 + ml, palette[s % std::size(palette)],
               solid ? "" : " stroke-dasharray=\"6,4\"", 46 + ml, y + 4, schemes[s]);
  }
  svg << "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << svg.str();
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

double seed_mean(const std::vector<ResultRow>& rows, const std::string& scheme, double mu,
                 double ResultRow::*field) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.scheme == scheme && std::abs(r.mu - mu) < 1e-12) {
      sum += r.*field;
      ++n;
    }
  }
  if (n == 0) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("no rows for {} at mu={}", scheme, mu));
  }
  return sum / static_cast<double>(n);
}

bool TableReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TableCheck& c) { return !c.checked || c.pass; });
}

namespace {

// Published values: |eps(H)| and |eps(rho0)| for 8 and 12 qubits, then cost.
struct RefRow {
  double eh8, er8, eh12, er12, cost;
};
struct RefTable {
  RefRow unmit, ver, exp;
};

RefTable reference(NoiseKind kind, int mu) {
  if (kind == NoiseKind::Depolarising2Q) {
    if (mu == 1) {
      return {{0.493, 0.601, 0.390, 0.610, 1.0},
              {0.229, 0.279, 0.175, 0.299, 3.2},
              {0.027, 0.027, 0.029, 0.009, 6.5}};
    }
    return {{0.739, 0.838, 0.618, 0.848, 1.0},
            {0.504, 0.567, 0.413, 0.595, 7.1},
            {0.051, 0.063, 0.051, 0.025, 41.4}};
  }
  if (mu == 1) {
    return {{0.527, 0.628, 0.431, 0.631, 1.0},
            {0.196, 0.202, 0.169, 0.210, 4.6},
            {0.046, 0.017, 0.032, 0.005, 7.4}};
  }
  return {{0.771, 0.857, 0.663, 0.863, 1.0},
          {0.543, 0.556, 0.477, 0.574, 9.7},
          {0.094, 0.076, 0.068, 0.022, 55.6}};
}

TableCheck make_check(std::string label, double value, double reference, double lo, double hi,
                      bool checked) {
  return {std::move(label), value, reference, lo, hi, checked, !checked || (value >= lo && value <= hi)};
}

TableCheck info(std::string label, double value, double reference) {
  return {std::move(label), value, reference, 0.0, 0.0, false, true};
}

TableCheck rel15(std::string label, double value, double reference, bool checked) {
  return make_check(std::move(label), value, reference, 0.85 * reference, 1.15 * reference,
                    checked);
}

}  // namespace

TableReport tables_from_rows(const std::vector<ResultRow>& rows, NoiseKind noise,
                             const LatticeSpec& lattice) {
  const bool dep = noise == NoiseKind::Depolarising2Q;
  const bool small = lattice.sites() == 4;
  const std::string exp = expanded_scheme_for(noise);
  const std::string noise_name(to_string(noise));
  const SymmetrySet group = symmetries(lattice).group();
  const DetectableFractions fractions = detectable_fractions(noise, lattice);

  TableReport report;
  std::set<std::uint64_t> seeds;
  for (const auto& r : rows) seeds.insert(r.seed);
  report.accepted_seeds = seeds.size();

  for (int mu : {1, 2}) {
    const RefTable ref = reference(noise, mu);
    const std::string tag = fmt::format("{} {} mu={}", noise_name, lattice.str(), mu);
    struct Named {
      const char* label;
      std::string scheme;
      RefRow ref;
    };
    const Named named[] = {{"Unmitigated", "unmit", ref.unmit},
                           {"Verified", "ver-full", ref.ver},
                           {"Expanded", exp, ref.exp}};
    for (const auto& n : named) {
      const double eh = seed_mean(rows, n.scheme, mu, &ResultRow::eps_h);
      const double er = seed_mean(rows, n.scheme, mu, &ResultRow::eps_rho0);
      const double cost = seed_mean(rows, n.scheme, mu, &ResultRow::cost);
      const double ref_eh = small ? n.ref.eh8 : n.ref.eh12;
      const double ref_er = small ? n.ref.er8 : n.ref.er12;
      const std::string base = fmt::format("{} {}", tag, n.label);
      const std::string scheme = n.scheme;

      // |eps(H)| bands apply to the 8-qubit tables at mu = 1 only.
      const bool band = small && mu == 1;
      if (band && dep && scheme == "unmit") {
        report.checks.push_back(make_check(base + " |eps(H)|", eh, ref_eh, 0.39, 0.60, true));
      } else if (band && dep && scheme == "ver-full") {
        report.checks.push_back(make_check(base + " |eps(H)|", eh, ref_eh, 0.17, 0.30, true));
      } else if (band && dep && scheme == exp) {
        report.checks.push_back(make_check(base + " |eps(H)|", eh, ref_eh, 0.0, 0.06, true));
      } else if (band && !dep && scheme == "ver-full") {
        report.checks.push_back(make_check(base + " |eps(H)|", eh, ref_eh, 0.14, 0.26, true));
      } else if (band && !dep && scheme == exp) {
        report.checks.push_back(make_check(base + " |eps(H)|", eh, ref_eh, 0.0, 0.08, true));
      } else {
        report.checks.push_back(info(base + " |eps(H)|", eh, ref_eh));
      }
      report.checks.push_back(info(base + " |eps(rho0)|", er, ref_er));

      if (scheme == "unmit") {
        report.checks.push_back(info(base + " cost", cost, n.ref.cost));
        continue;
      }
      // Costs are parameter-independent; bit-flip mu=2 costs are not graded.
      const bool graded = dep || mu == 1;
      report.checks.push_back(rel15(base + " cost", cost, n.ref.cost, graded));
      if (dep) {
        const auto set = group.subset(parse_scheme(scheme));
        const double g = predict_gamma(ExpansionScheme::uniform(set), fractions, mu);
        report.checks.push_back(make_check(base + " analytic cost", 1.0 / (g * g), n.ref.cost,
                                           0.95 * n.ref.cost, 1.05 * n.ref.cost, true));
      }
    }

    if (dep) {
      const auto x = crossover_samples(seed_mean(rows, exp, mu, &ResultRow::cost),
                                       seed_mean(rows, exp, mu, &ResultRow::eps_rho0),
                                       seed_mean(rows, "ver-full", mu, &ResultRow::cost),
                                       seed_mean(rows, "ver-full", mu, &ResultRow::eps_rho0));
      const double lo = mu == 1 ? 25.0 : 70.0, hi = mu == 1 ? 60.0 : 150.0;
      report.checks.push_back(
          make_check(tag + " N*", x.n_star, mu == 1 ? 40.0 : 100.0, lo, hi, small));
    }

    if (dep && small && mu == 1) {
      std::map<std::uint64_t, std::map<std::string, double>> per_seed;
      for (const auto& r : rows) {
        if (std::abs(r.mu - mu) < 1e-12) per_seed[r.seed][r.scheme] = r.eps_h;
      }
      std::size_t ordered = 0, total = 0;
      for (const auto& [seed, m] : per_seed) {
        if (!m.count("unmit") || !m.count("ver-full") || !m.count(exp)) continue;
        ++total;
        if (m.at(exp) < m.at("ver-full") && m.at("ver-full") < m.at("unmit")) ++ordered;
      }
      const double frac = total ? static_cast<double>(ordered) / static_cast<double>(total) : 0.0;
      report.checks.push_back(make_check(tag + " per-seed ordering", frac, 1.0, 0.9, 1.0, true));
    }
  }
  if (small && dep) {
    report.checks.push_back(make_check(
        fmt::format("{} {} accepted seeds", noise_name, lattice.str()),
        static_cast<double>(report.accepted_seeds), 20.0, 20.0, 1e9, true));
  }
  return report;
}

TableReport reproduce_tables(const ExperimentConfig& config) {
  ExperimentConfig c = config;
  c.mu_grid = {1.0, 2.0};
  c.schemes = {"unmit", "ver-full", expanded_scheme_for(c.noise)};
  const auto rows = run_sweep(c);
  return tables_from_rows(rows, c.noise, c.lattice);
}

void print_tables(const TableReport& report, std::ostream& out) {
  fmt::print(out, "accepted seeds: {}\n", report.accepted_seeds);
  fmt::print(out, "{:<52} {:>10} {:>10} {:>18}  {}\n", "quantity", "value", "reference", "window",
             "status");
  for (const auto& c : report.checks) {
    const std::string window = c.checked ? fmt::format("[{:.4g}, {:.4g}]", c.lo, c.hi) : "-";
    fmt::print(out, "{:<52} {:>10.4g} {:>10.4g} {:>18}  {}\n", c.label, c.value, c.reference,
               window, c.checked ? (c.pass ? "PASS" : "FAIL") : "info");
  }
  fmt::print(out, "overall: {}\n", report.all_pass() ? "PASS" : "FAIL");
}

}  // namespace symex
