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


#include "symex/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symex/errors.hpp"

namespace symex {
namespace {

constexpr double kTieTolerance = 1e-9;
constexpr double kThresholdSlack = 1e-12;

void check_mu(double mu) {
  if (!(mu >= 0.0)) throw Error(ErrorKind::InvalidArgument, "mu must be >= 0");
}

PauliString restrict_to(const PauliString& g, std::size_t q0, std::size_t q1) {
  return PauliString(2).with_letter(0, g.letter(q0)).with_letter(1, g.letter(q1));
}

// Fraction of the 15 non-identity two-qubit Paulis anticommuting with r.
Rational depolarising_fraction(const PauliString& r) {
  long long count = 0;
  for (std::uint64_t x = 0; x < 4; ++x) {
    for (std::uint64_t z = 0; z < 4; ++z) {
      if (x == 0 && z == 0) continue;
      if (!PauliString::from_masks(2, x, z).commutes_with(r)) ++count;
    }
  }
  return Rational(count, 15);
}

// Fraction of the two X error locations after a gate that r detects.
Rational bitflip_fraction(const PauliString& r) {
  long long count = 0;
  for (std::size_t q = 0; q < 2; ++q) {
    if (!PauliString(2).with_letter(q, PauliString::Letter::X).commutes_with(r)) {
      ++count;
    }
  }
  return Rational(count, 2);
}

Rational location_fraction(NoiseKind kind, const PauliString& r) {
  return kind == NoiseKind::Depolarising2Q ? depolarising_fraction(r)
                                           : bitflip_fraction(r);
}

double sum_exp(const SymmetrySet& set, const DetectableFractions& fr, double mu) {
  double s = 0.0;
  for (const auto& g : set.elements()) s += std::exp(-2.0 * fr.at(g) * mu);
  return s;
}

}  // namespace

double DetectableFractions::at(const PauliString& g) const {
  const auto it = f.find(g);
  if (it == f.end()) {
    if (g.is_identity()) return 0.0;
    throw Error(ErrorKind::MissingFraction, "no detectable fraction for " + g.str());
  }
  return it->second;
}

double poisson_p0(double mu) {
  check_mu(mu);
  return std::exp(-mu);
}

double predict_symmetry_expect(double f_g, double mu) {
  check_mu(mu);
  if (!(f_g >= 0.0 && f_g <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "fraction outside [0, 1]");
  }
  return std::exp(-2.0 * f_g * mu);
}

double predict_gamma(const ExpansionScheme& scheme, const DetectableFractions& fractions,
                     double mu) {
  const auto w = scheme.normalised_weights();
  double out = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += w[i] * predict_symmetry_expect(fractions.at(scheme.ops()[i]), mu);
  }
  return out;
}

double predict_projector(const std::vector<double>& group_fractions, double mu) {
  if (group_fractions.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty fraction list");
  }
  double s = 0.0;
  for (double f : group_fractions) s += predict_symmetry_expect(f, mu);
  return s / static_cast<double>(group_fractions.size());
}

double predict_projector_independent(const std::vector<double>& generator_fractions,
                                     double mu) {
  double out = 1.0;
  for (double f : generator_fractions) {
    out *= (1.0 + predict_symmetry_expect(f, mu)) / 2.0;
  }
  return out;
}

DetectableFractions detectable_fractions(NoiseKind kind, const LatticeSpec& lattice) {
  const HubbardSymmetries sym = symmetries(lattice);
  DetectableFractions out;
  out.f[PauliString(lattice.num_qubits())] = 0.0;
  if (kind == NoiseKind::Depolarising2Q) {
    out.f[sym.g_up] = 2.0 / 5.0;
    out.f[sym.g_down] = 2.0 / 5.0;
    out.f[sym.g_tot] = 8.0 / 15.0;
  } else if (kind == NoiseKind::BitFlip1Q) {
    out.f[sym.g_up] = 0.5;
    out.f[sym.g_down] = 0.5;
    out.f[sym.g_tot] = 1.0;
  } else {
    throw Error(ErrorKind::UnsupportedNoise, "no fractions for this noise kind");
  }
  return out;
}

std::vector<Rational> brute_force_fractions(NoiseKind kind) {
  // Two qubits per spin block is enough to realise every gate class:
  // qubits 0,1 spin up and 2,3 spin down.
  const SymmetrySet group = symmetries(LatticeSpec{1, 2}).group();
  struct LocationClass {
    std::size_t q0, q1;
    Rational weight;
  };
  const LocationClass classes[] = {
      {0, 2, Rational(1, 2)},  // onsite, across spins
      {0, 1, Rational(1, 4)},  // hop/swap within spin up
      {2, 3, Rational(1, 4)},  // hop/swap within spin down
  };
  std::vector<Rational> out;
  for (const auto& g : group.elements()) {
    Rational f(0);
    for (const auto& c : classes) {
      f += c.weight * location_fraction(kind, restrict_to(g, c.q0, c.q1));
    }
    out.push_back(f);
  }
  return out;
}

std::vector<Rational> circuit_fractions(const NoisyCircuit& circuit, NoiseKind kind) {
  if (circuit.gates.empty()) {
    throw Error(ErrorKind::InvalidArgument, "circuit has no noise locations");
  }
  const SymmetrySet group = symmetries(circuit.lattice).group();
  std::vector<Rational> out;
  for (const auto& g : group.elements()) {
    Rational f(0);
    for (const auto& gate : circuit.gates) {
      f += location_fraction(kind, restrict_to(g, gate.qubits[0], gate.qubits[1]));
    }
    out.push_back(f / static_cast<long long>(circuit.gates.size()));
  }
  return out;
}

BiasCost predicted_bias_and_cost(const SymmetrySet& set,
                                 const DetectableFractions& fractions, double mu) {
  check_mu(mu);
  const double size = static_cast<double>(set.size());
  double lin = 0.0;
  for (const auto& g : set.elements()) lin += 2.0 * fractions.at(g) - fractions.f_eps;
  const double s = sum_exp(set, fractions, mu);
  BiasCost out;
  out.first_order_bias = std::abs(lin) * mu / size;
  out.exact_bias = std::abs(1.0 - size * std::exp(-fractions.f_eps * mu) / s);
  out.cost = size * size / (s * s);
  return out;
}

SearchResult search_small_bias(
    const SymmetrySet& group, const DetectableFractions& fractions, double mu,
    std::optional<double> delta, SearchMode mode,
    const std::optional<std::map<PauliString, double>>& measured_expects) {
  check_mu(mu);
  if (group.size() > 16) {
    throw Error(ErrorKind::InvalidArgument, "exhaustive search limited to 16 symmetries");
  }
  if (mode == SearchMode::Measured && !measured_expects) {
    throw Error(ErrorKind::InvalidArgument, "measured mode needs expectation values");
  }
  auto expect_of = [&](const PauliString& g) {
    if (mode == SearchMode::Analytic) {
      return predict_symmetry_expect(fractions.at(g), mu);
    }
    const auto it = measured_expects->find(g);
    if (it == measured_expects->end()) {
      if (g.is_identity()) return 1.0;
      throw Error(ErrorKind::MissingFraction, "no measured value for " + g.str());
    }
    return it->second;
  };
  const double target = std::exp(-fractions.f_eps * mu);

  SearchResult result;
  if (delta) {
    result.delta = *delta;
  } else {
    double pi = 0.0;
    for (const auto& g : group.elements()) pi += expect_of(g);
    pi /= static_cast<double>(group.size());
    result.delta = std::abs(1.0 - target / pi);
  }
  const double lo = target / (1.0 + result.delta);
  const double hi = result.delta < 1.0 ? target / (1.0 - result.delta)
                                       : std::numeric_limits<double>::infinity();
  std::vector<PauliString> kept;
  for (const auto& g : group.elements()) {
    const double v = expect_of(g);
    if (v >= lo - kThresholdSlack && v <= hi + kThresholdSlack) kept.push_back(g);
  }
  if (kept.empty()) {
    throw Error(ErrorKind::EmptyThresholdSet, "no symmetry inside the threshold window");
  }
  result.threshold_set = SymmetrySet(kept);

  const std::uint64_t count = std::uint64_t{1} << kept.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    Candidate c;
    c.mask = mask;
    c.set = result.threshold_set.subset(mask);
    double sum = 0.0;
    for (const auto& g : c.set.elements()) sum += expect_of(g);
    c.gamma = sum / static_cast<double>(c.set.size());
    c.objective = mode == SearchMode::Measured
                      ? std::abs(c.gamma - target)
                      : predicted_bias_and_cost(c.set, fractions, mu).first_order_bias;
    result.candidate_sets.push_back(std::move(c));
  }

  const Candidate* best = &result.candidate_sets.front();
  for (const auto& c : result.candidate_sets) {
    if (c.objective < best->objective - kTieTolerance) {
      best = &c;
    } else if (std::abs(c.objective - best->objective) <= kTieTolerance) {
      if (c.gamma > best->gamma + kTieTolerance) {
        best = &c;
      } else if (std::abs(c.gamma - best->gamma) <= kTieTolerance &&
                 c.set.size() < best->set.size()) {
        best = &c;
      }
    }
  }
  result.chosen = best->set;
  if (mode == SearchMode::Measured) {
    result.predicted_bias = std::abs(1.0 - target / best->gamma);
    result.predicted_cost = 1.0 / (best->gamma * best->gamma);
  } else {
    const BiasCost bc = predicted_bias_and_cost(best->set, fractions, mu);
    result.predicted_bias = bc.exact_bias;
    result.predicted_cost = bc.cost;
  }
  return result;
}

}  // namespace symex
