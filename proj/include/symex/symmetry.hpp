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
#include <utility>
#include <variant>
#include <vector>

#include "symex/pauli.hpp"
#include "symex/simulator.hpp"
#include "symex/state.hpp"
#include "symex/symmetry_set.hpp"

namespace symex {

/// Nonnegative weights over a symmetry set.
class ExpansionScheme {
 public:
  /// Throws InvalidArgument for negative weights or a size mismatch and
  /// ZeroWeightSum when every weight is zero.
  ExpansionScheme(SymmetrySet ops, std::vector<double> weights);
  static ExpansionScheme uniform(SymmetrySet ops);

  const SymmetrySet& ops() const noexcept { return ops_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  /// Weights divided by their sum.
  std::vector<double> normalised_weights() const;

 private:
  SymmetrySet ops_;
  std::vector<double> weights_;
};

struct SchemeReport {
  double gamma_expect = 0.0;    ///< <Gamma_w>
  double fidelity = 0.0;        ///< F_w = <rho0> / <Gamma_w>
  double abs_infidelity = 0.0;  ///< |1 - F_w|
  double b_undet = 0.0;         ///< (<Pi> - <rho0>) / <Gamma_w>
  double b_det = 0.0;           ///< (<Gamma_w> - <Pi>) / <Gamma_w>
  double cost = 0.0;            ///< <Gamma_w>^-2
  double obs_value = 0.0;       ///< Tr(O rho_w)
  double rel_bias_obs = 0.0;    ///< 1 - Tr(O rho_w) / Tr(O rho0)
};

struct CrossoverReport {
  double n_star = 0.0;
  double c_a = 0.0;
  double c_b = 0.0;
  double eps_a = 0.0;
  double eps_b = 0.0;
};

/// sum_G w_G G / sum_G w_G.
Observable expansion_operator(const ExpansionScheme& scheme);

/// <Gamma_w> on rho.
double gamma_expect(const DensityOperator& rho, const ExpansionScheme& scheme);

/// Tr(O Gamma_w rho), real part. O and the scheme elements need not commute.
double obs_gamma_expect(const DensityOperator& rho, const ExpansionScheme& scheme,
                        const Observable& obs);

/// <O Gamma_w> / <Gamma_w>. Throws DegenerateNormalisation when
/// |<Gamma_w>| < 1e-12.
double expanded_value(const DensityOperator& rho, const ExpansionScheme& scheme,
                      const Observable& obs);

/// Gamma_w rho / <Gamma_w>, unit trace but not Hermitian in general.
DensityOperator expanded_density(const DensityOperator& rho,
                                 const ExpansionScheme& scheme);

/// Full report. `group` must be a group; `obs_ideal` is Tr(O rho0).
/// Throws NonPositiveGamma when <Gamma_w> <= 0.
SchemeReport scheme_report(const DensityOperator& rho, const PureState& psi0,
                           const ExpansionScheme& scheme, const SymmetrySet& group,
                           const Observable& obs);

SchemeReport scheme_report(const SimulationResult& result,
                           const ExpansionScheme& scheme, const SymmetrySet& group,
                           const Observable& obs);

struct SimpleBiases {
  double unmitigated = 0.0;
  double verified = 0.0;
  double expanded = 0.0;
};

/// Single-symmetry example: (P_u + P_d, P_u / (1 - P_d), |P_u - P_d| / |1 - 2 P_d|).
SimpleBiases simple_example_biases(double p_u, double p_d);

/// N* = (C_a - C_b) / (eps_b^2 - eps_a^2), absolute infidelities as bias.
/// Throws EqualBiases when the denominator vanishes.
CrossoverReport crossover_samples(const SchemeReport& a, const SchemeReport& b);
CrossoverReport crossover_samples(double c_a, double eps_a, double c_b, double eps_b);

/// Qubit relabelling; perm[q] is the image of qubit q.
struct QubitPermutation {
  std::vector<std::size_t> perm;
};

/// A symmetry of the noisy state used to conjugate group elements.
using Conjugator = std::variant<PauliString, QubitPermutation>;

PauliString conjugate(const Conjugator& s, const PauliString& g);

struct EquivalenceClass {
  PauliString representative;  ///< first member in group order
  std::vector<PauliString> members;
};

/// Classes of G ~ S G S^-1 over the listed conjugators. Images outside the
/// group are ignored.
std::vector<EquivalenceClass> equivalence_partition(
    const SymmetrySet& group, const std::vector<Conjugator>& conjugators);
std::vector<EquivalenceClass> equivalence_partition(const SymmetrySet& group,
                                                    const SymmetrySet& commuting_sym);

struct NoiselessDecomposition {
  double fidelity = 0.0;
  DensityOperator rho_eps;
};

/// rho_w = F rho0 + (1 - F) rho_eps with rho_eps = (1 - rho0) rho_w / (1 - F).
/// Throws UnitFidelity when |1 - F| < 1e-12.
NoiselessDecomposition noiseless_decomposition(const DensityOperator& rho_w,
                                               const PureState& psi0);

}  // namespace symex
