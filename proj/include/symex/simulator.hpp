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

#include "symex/hubbard.hpp"
#include "symex/noise.hpp"
#include "symex/state.hpp"

namespace symex {

struct SimulationResult {
  DensityOperator rho;  ///< noisy output
  PureState rho0;       ///< ideal output
  double energy0 = 0.0; ///< <H> on the ideal output
  double mu = 0.0;
  NoiseKind kind = NoiseKind::Depolarising2Q;
};

/// Exact density-matrix evolution: each gate is followed by one depolarising
/// channel on its pair, or by a bit-flip on each of its two qubits. Throws
/// LocationMismatch when noise.locations disagrees with the circuit.
SimulationResult simulate(const NoisyCircuit& circuit, const NoiseSpec& noise);

/// As above, with the noise locations taken from the circuit.
SimulationResult simulate(const NoisyCircuit& circuit, NoiseKind kind, double mu);

double noisy_expect(const SimulationResult& result, const Observable& obs);

}  // namespace symex
