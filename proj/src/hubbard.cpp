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


#include "symex/hubbard.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <regex>

#include "symex/errors.hpp"

namespace symex {
namespace {

constexpr std::size_t kMaxLatticeQubits = 12;

// Uniform double on [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate(const LatticeSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0) {
    throw Error(ErrorKind::InvalidArgument, "lattice needs at least one site");
  }
  if (spec.num_qubits() > kMaxLatticeQubits) {
    throw Error(ErrorKind::UnsupportedLattice,
                spec.str() + " needs more than 12 qubits");
  }
}

std::string_view kind_name(GateKind k) {
  switch (k) {
    case GateKind::Onsite: return "onsite";
    case GateKind::HopSwap: return "hopswap";
    case GateKind::Swap: return "swap";
  }
  return "swap";
}

GateKind parse_kind(const std::string& s) {
  if (s == "onsite") return GateKind::Onsite;
  if (s == "hopswap") return GateKind::HopSwap;
  if (s == "swap") return GateKind::Swap;
  throw Error(ErrorKind::InvalidConfig, "unknown gate kind '" + s + "'");
}

}  // namespace

LatticeSpec LatticeSpec::parse(const std::string& text) {
  static const std::regex pattern(R"(^\s*(\d+)\s*[xX]\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw Error(ErrorKind::InvalidConfig, "lattice must look like 2x2, got '" + text + "'");
  }
  LatticeSpec spec;
  spec.rows = std::stoul(m[1].str());
  spec.cols = std::stoul(m[2].str());
  if (spec.rows == 0 || spec.cols == 0) {
    throw Error(ErrorKind::InvalidConfig, "lattice needs at least one site");
  }
  return spec;
}

std::string LatticeSpec::str() const {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

std::array<std::size_t, 2> snake_site(const LatticeSpec& spec, std::size_t k) {
  const std::size_t r = k / spec.cols;
  const std::size_t j = k % spec.cols;
  return {r, r % 2 == 0 ? j : spec.cols - 1 - j};
}

bool lattice_neighbours(const LatticeSpec& spec, std::size_t a, std::size_t b) {
  const auto sa = snake_site(spec, a);
  const auto sb = snake_site(spec, b);
  const std::size_t dr = sa[0] > sb[0] ? sa[0] - sb[0] : sb[0] - sa[0];
  const std::size_t dc = sa[1] > sb[1] ? sa[1] - sb[1] : sb[1] - sa[1];
  return dr + dc == 1;
}

Matrix onsite_unitary(double phi) {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = std::polar(1.0, -phi);
  return m;
}

Matrix hopping_unitary(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(3, 3) = 1.0;
  m(1, 1) = c;
  m(2, 2) = c;
  m(1, 2) = cplx(0.0, -s);
  m(2, 1) = cplx(0.0, -s);
  return m;
}

Matrix fswap_unitary() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = -1.0;
  return m;
}

Matrix Gate::unitary() const {
  switch (kind) {
    case GateKind::Onsite: return onsite_unitary(angle);
    case GateKind::HopSwap: return fswap_unitary() * hopping_unitary(angle);
    case GateKind::Swap: return fswap_unitary();
  }
  return fswap_unitary();
}

std::size_t NoisyCircuit::noise_locations(NoiseKind kind) const noexcept {
  return kind == NoiseKind::Depolarising2Q ? gates.size() : 2 * gates.size();
}

NoiseSpec NoisyCircuit::noise(NoiseKind kind, double mu) const {
  return NoiseSpec{kind, mu, noise_locations(kind)};
}

std::size_t expected_gate_count(std::size_t sites, std::size_t layers) {
  if (layers == 0) return 0;
  return layers * (2 * sites * sites - sites) + sites;
}

NoisyCircuit build_circuit(const LatticeSpec& spec, std::size_t layers,
                           std::uint64_t seed) {
  validate(spec);
  const std::size_t s = spec.sites();
  if (layers % 2 == 1) {
    // An odd number of sweeps leaves the orbital order reversed; the
    // Hamiltonian is unchanged only if reversal maps edges onto edges.
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        if (lattice_neighbours(spec, a, b) !=
            lattice_neighbours(spec, s - 1 - a, s - 1 - b)) {
          throw Error(ErrorKind::UnsupportedLattice,
                      "ordering reversal is not a symmetry of " + spec.str());
        }
      }
    }
  }

  NoisyCircuit c;
  c.lattice = spec;
  c.layers = layers;
  c.seed = seed;
  if (layers == 0) return c;

  std::mt19937_64 rng(seed);
  auto draw = [&] {
    const double a = 2.0 * std::numbers::pi * uniform01(rng);
    c.params.push_back(a);
    return a;
  };
  auto onsite_row = [&] {
    for (std::size_t k = 0; k < s; ++k) {
      c.gates.push_back({GateKind::Onsite, {k, s + k}, draw()});
    }
  };

  // order[k] is the snake position of the orbital currently on qubit k.
  std::vector<std::size_t> order(s);
  for (std::size_t k = 0; k < s; ++k) order[k] = k;

  for (std::size_t layer = 0; layer < layers; ++layer) {
    for (std::size_t brick = 0; brick < s; ++brick) {
      onsite_row();
      for (std::size_t k = brick % 2; k + 1 < s; k += 2) {
        const bool edge = lattice_neighbours(spec, order[k], order[k + 1]);
        const double theta = edge ? draw() : 0.0;
        const GateKind kind = edge ? GateKind::HopSwap : GateKind::Swap;
        c.gates.push_back({kind, {k, k + 1}, theta});
        c.gates.push_back({kind, {s + k, s + k + 1}, theta});
        std::swap(order[k], order[k + 1]);
      }
    }
  }
  onsite_row();
  return c;
}

std::uint64_t initial_basis_index(const LatticeSpec& spec) {
  const std::size_t s = spec.sites();
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < s; ++k) {
    if (k % 2 == 0) {
      index |= (std::uint64_t{1} << k) | (std::uint64_t{1} << (s + k));
    }
  }
  return index;
}

PureState ideal_state(const NoisyCircuit& circuit) {
  validate(circuit.lattice);
  PureState psi = PureState::basis(circuit.num_qubits(),
                                   initial_basis_index(circuit.lattice));
  for (const auto& g : circuit.gates) psi.apply(g.unitary(), g.qubits);
  return psi;
}

Observable hamiltonian(const LatticeSpec& spec) {
  validate(spec);
  const std::size_t s = spec.sites();
  const std::size_t n = spec.num_qubits();
  Observable h(n);
  for (std::size_t block = 0; block < 2; ++block) {
    const std::size_t o = block * s;
    for (std::size_t p = 0; p < s; ++p) {
      for (std::size_t q = p + 1; q < s; ++q) {
        if (!lattice_neighbours(spec, p, q)) continue;
        std::uint64_t string = 0;
        for (std::size_t m = p + 1; m < q; ++m) string |= std::uint64_t{1} << (o + m);
        const std::uint64_t ends =
            (std::uint64_t{1} << (o + p)) | (std::uint64_t{1} << (o + q));
        h.add(-spec.t / 2.0, PauliString::from_masks(n, ends, string));
        h.add(-spec.t / 2.0, PauliString::from_masks(n, ends, string | ends));
      }
    }
  }
  for (std::size_t k = 0; k < s; ++k) {
    const std::uint64_t zu = std::uint64_t{1} << k;
    const std::uint64_t zd = std::uint64_t{1} << (s + k);
    h.add(spec.u / 4.0, PauliString(n));
    h.add(-spec.u / 4.0, PauliString::from_masks(n, 0, zu));
    h.add(-spec.u / 4.0, PauliString::from_masks(n, 0, zd));
    h.add(spec.u / 4.0, PauliString::from_masks(n, 0, zu | zd));
  }
  return h.simplified(0.0);
}

Observable energy_observable(const LatticeSpec& spec) {
  Observable out(spec.num_qubits());
  for (const auto& term : hamiltonian(spec).terms()) {
    if (!term.pauli.is_identity_letters()) out.add(term.coefficient, term.pauli);
  }
  return out;
}

SymmetrySet HubbardSymmetries::group() const {
  return SymmetrySet({PauliString(g_up.num_qubits()), g_up, g_down, g_tot});
}

HubbardSymmetries symmetries(const LatticeSpec& spec) {
  validate(spec);
  const std::size_t s = spec.sites();
  const std::size_t n = spec.num_qubits();
  const std::uint64_t init = initial_basis_index(spec);
  const std::uint64_t up_mask = (std::uint64_t{1} << s) - 1;
  const std::uint64_t down_mask = up_mask << s;
  auto parity_sign = [&](std::uint64_t mask) {
    return std::popcount(init & mask) % 2 == 0 ? 1 : -1;
  };
  HubbardSymmetries out;
  out.g_up = PauliString::from_masks(n, 0, up_mask, parity_sign(up_mask));
  out.g_down = PauliString::from_masks(n, 0, down_mask, parity_sign(down_mask));
  out.g_tot = pauli_mul(out.g_up, out.g_down);
  return out;
}

std::vector<std::size_t> spin_exchange(const LatticeSpec& spec) {
  const std::size_t s = spec.sites();
  std::vector<std::size_t> perm(2 * s);
  for (std::size_t k = 0; k < s; ++k) {
    perm[k] = s + k;
    perm[s + k] = k;
  }
  return perm;
}

nlohmann::json to_json(const NoisyCircuit& circuit) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : circuit.gates) {
    gates.push_back({{"kind", kind_name(g.kind)},
                     {"qubits", {g.qubits[0], g.qubits[1]}},
                     {"angle", g.angle}});
  }
  return {{"lattice", circuit.lattice.str()},
          {"t", circuit.lattice.t},
          {"u", circuit.lattice.u},
          {"layers", circuit.layers},
          {"seed", circuit.seed},
          {"params", circuit.params},
          {"gates", std::move(gates)}};
}

NoisyCircuit circuit_from_json(const nlohmann::json& doc) {
  try {
    NoisyCircuit c;
    c.lattice = LatticeSpec::parse(doc.at("lattice").get<std::string>());
    c.lattice.t = doc.value("t", 1.0);
    c.lattice.u = doc.value("u", 2.0);
    validate(c.lattice);
    c.layers = doc.at("layers").get<std::size_t>();
    c.seed = doc.at("seed").get<std::uint64_t>();
    c.params = doc.at("params").get<std::vector<double>>();
    for (const auto& g : doc.at("gates")) {
      Gate gate;
      gate.kind = parse_kind(g.at("kind").get<std::string>());
      gate.qubits = g.at("qubits").get<std::array<std::size_t, 2>>();
      gate.angle = g.at("angle").get<double>();
      if (gate.qubits[0] >= c.num_qubits() || gate.qubits[1] >= c.num_qubits() ||
          gate.qubits[0] == gate.qubits[1]) {
        throw Error(ErrorKind::InvalidConfig, "gate qubits out of range");
      }
      c.gates.push_back(gate);
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, e.what());
  }
}

}  // namespace symex
