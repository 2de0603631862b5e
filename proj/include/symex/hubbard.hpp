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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symex/noise.hpp"
#include "symex/pauli.hpp"
#include "symex/state.hpp"
#include "symex/symmetry_set.hpp"

namespace symex {

/// Open-boundary rectangular Hubbard lattice.
struct LatticeSpec {
  std::size_t rows = 2;
  std::size_t cols = 2;
  double t = 1.0;
  double u = 2.0;

  std::size_t sites() const noexcept { return rows * cols; }
  std::size_t num_qubits() const noexcept { return 2 * sites(); }

  /// Parses "2x2" style strings.
  static LatticeSpec parse(const std::string& text);
  std::string str() const;
};

/// Site of snake-order position k: rows run left to right on even rows and
/// right to left on odd rows.
std::array<std::size_t, 2> snake_site(const LatticeSpec& spec, std::size_t k);

/// True when snake positions a and b are nearest neighbours on the lattice.
bool lattice_neighbours(const LatticeSpec& spec, std::size_t a, std::size_t b);

enum class GateKind {
  Onsite,   ///< diag(1, 1, 1, e^{-i phi}) across spins on one site
  HopSwap,  ///< fermionic swap after exp(-i theta (XX + YY) / 2)
  Swap,     ///< fermionic swap alone
};

struct Gate {
  GateKind kind = GateKind::Swap;
  std::array<std::size_t, 2> qubits{};
  double angle = 0.0;  ///< phi or theta; unused for Swap

  Matrix unitary() const;
};

Matrix onsite_unitary(double phi);
Matrix hopping_unitary(double theta);
Matrix fswap_unitary();

/// Two-qubit gate sequence with one depolarising location per gate or two
/// bit-flip locations per gate.
struct NoisyCircuit {
  LatticeSpec lattice;
  std::size_t layers = 0;
  std::uint64_t seed = 0;
  std::vector<Gate> gates;
  std::vector<double> params;

  std::size_t num_qubits() const noexcept { return lattice.num_qubits(); }
  std::size_t noise_locations(NoiseKind kind) const noexcept;
  NoiseSpec noise(NoiseKind kind, double mu) const;
};

/// Gate count of the swap-network layout for s sites per spin and L layers.
std::size_t expected_gate_count(std::size_t sites, std::size_t layers);

/// One layer is one full fermionic-swap sweep: before each of the s
/// alternating brick rows an onsite row runs on every site, and a final onsite
/// row closes the circuit. Within a brick, a pair of neighbouring sites gets
/// HopSwap and any other pair gets Swap; both spin blocks use the same angle.
/// Angles are uniform on [0, 2 pi). Throws UnsupportedLattice beyond 12 qubits
/// or for lattices whose ordering reversal is not an automorphism.
NoisyCircuit build_circuit(const LatticeSpec& spec, std::size_t layers,
                           std::uint64_t seed);

/// Half-filled state with every other orbital of each spin block occupied
/// (even snake positions, both spins). It is invariant under spin exchange.
/// Occupied orbitals have their bit set.
std::uint64_t initial_basis_index(const LatticeSpec& spec);

PureState ideal_state(const NoisyCircuit& circuit);

/// Jordan-Wigner Hubbard Hamiltonian in snake ordering, including the constant
/// part of the onsite term.
Observable hamiltonian(const LatticeSpec& spec);

/// hamiltonian(spec) without its identity component, so the maximally mixed
/// state has zero energy. Relative energy biases are quoted against this.
Observable energy_observable(const LatticeSpec& spec);

struct HubbardSymmetries {
  PauliString g_up;
  PauliString g_down;
  PauliString g_tot;

  /// {I, G_up, G_down, G_tot} in that order.
  SymmetrySet group() const;
};

/// Parity operators sign-corrected to stabilise the initial state.
HubbardSymmetries symmetries(const LatticeSpec& spec);

/// Qubit permutation exchanging the spin blocks: k <-> k + sites.
std::vector<std::size_t> spin_exchange(const LatticeSpec& spec);

nlohmann::json to_json(const NoisyCircuit& circuit);
NoisyCircuit circuit_from_json(const nlohmann::json& doc);

}  // namespace symex
