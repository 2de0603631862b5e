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

#include <cstddef>
#include <map>

#include "symex/state.hpp"

namespace symex {

/// M copies of a single-copy noisy state sigma with ideal state sigma0.
struct CopySpec {
  DensityOperator sigma;
  PureState sigma0;
  std::size_t m_copies = 1;
};

/// Tr(sigma0 sigma^m) / Tr(sigma^m). Throws BadCycleOrder unless 1 <= m <= M.
double cycle_fidelity(const CopySpec& spec, std::size_t m);

/// First-copy fidelity of Pi_M rho Pi_M / Tr(Pi_M rho), rho = sigma^{(x)M}, with
/// Pi_M the explicit symmetriser. Throws DimensionOverflow past 12 qubits.
double verification_fidelity(const CopySpec& spec);

/// argmax over m of cycle_fidelity; ties within 1e-12 go to the larger m.
std::size_t optimal_weight_claim(const CopySpec& spec);

/// Permutations of M copies grouped by the length of the cycle containing
/// copy 1. Requires 1 <= M <= 6.
std::map<std::size_t, std::size_t> equivalence_classes_sm(std::size_t m_copies);

}  // namespace symex
