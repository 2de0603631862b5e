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


#include "symex/simulator.hpp"

#include "symex/errors.hpp"

namespace symex {

SimulationResult simulate(const NoisyCircuit& circuit, const NoiseSpec& noise) {
  const std::size_t expected = circuit.noise_locations(noise.kind);
  if (noise.locations != expected) {
    throw Error(ErrorKind::LocationMismatch,
                "noise has " + std::to_string(noise.locations) +
                    " locations, circuit has " + std::to_string(expected));
  }
  const double p = circuit.gates.empty() ? 0.0 : mu_to_p(noise);
  if (p < 0.0 || p >= 1.0) {
    throw Error(ErrorKind::BadProbability, "per-location probability out of range");
  }

  const std::size_t n = circuit.num_qubits();
  PureState psi0 = ideal_state(circuit);
  DensityOperator rho = DensityOperator::from_pure(
      PureState::basis(n, initial_basis_index(circuit.lattice)));
  Matrix& m = rho.mutable_matrix();
  for (const auto& g : circuit.gates) {
    kernels::conjugate(m, g.unitary(), g.qubits);
    if (noise.kind == NoiseKind::Depolarising2Q) {
      kernels::depolarise(m, g.qubits, p);
    } else {
      kernels::bitflip(m, g.qubits[0], p);
      kernels::bitflip(m, g.qubits[1], p);
    }
  }
  const double e0 = psi0.expect(hamiltonian(circuit.lattice));
  return SimulationResult{std::move(rho), std::move(psi0), e0, noise.mu, noise.kind};
}

SimulationResult simulate(const NoisyCircuit& circuit, NoiseKind kind, double mu) {
  return simulate(circuit, circuit.noise(kind, mu));
}

double noisy_expect(const SimulationResult& result, const Observable& obs) {
  return expect(result.rho, obs);
}

}  // namespace symex
