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


#include "symex/symmetry.hpp"

#include <cmath>
#include <numeric>

#include "symex/errors.hpp"

namespace symex {
namespace {

constexpr double kDegenerate = 1e-12;

}  // namespace

ExpansionScheme::ExpansionScheme(SymmetrySet ops, std::vector<double> weights)
    : ops_(std::move(ops)), weights_(std::move(weights)) {
  if (weights_.size() != ops_.size()) {
    throw Error(ErrorKind::InvalidArgument, "one weight per symmetry required");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::InvalidArgument, "weights must be finite and >= 0");
    }
    sum += w;
  }
  if (sum == 0.0) throw Error(ErrorKind::ZeroWeightSum, "all weights are zero");
}

ExpansionScheme ExpansionScheme::uniform(SymmetrySet ops) {
  std::vector<double> w(ops.size(), 1.0);
  return ExpansionScheme(std::move(ops), std::move(w));
}

std::vector<double> ExpansionScheme::normalised_weights() const {
  const double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  std::vector<double> out(weights_);
  for (double& w : out) w /= sum;
  return out;
}

Observable expansion_operator(const ExpansionScheme& scheme) {
  Observable out(scheme.ops().num_qubits());
  const auto w = scheme.normalised_weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0.0) out.add(w[i], scheme.ops()[i]);
  }
  return out;
}

double gamma_expect(const DensityOperator& rho, const ExpansionScheme& scheme) {
  return expect(rho, expansion_operator(scheme));
}

double obs_gamma_expect(const DensityOperator& rho, const ExpansionScheme& scheme,
                        const Observable& obs) {
  if (obs.num_qubits() != rho.num_qubits() ||
      scheme.ops().num_qubits() != rho.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "observable, scheme and state differ");
  }
  const auto w = scheme.normalised_weights();
  cplx total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0.0) continue;
    for (const auto& term : obs.terms()) {
      const PhasedPauli prod = multiply_phased(term.pauli, scheme.ops()[i]);
      total += w[i] * term.coefficient * prod.factor() *
               trace_pauli(rho.matrix(), prod.pauli);
    }
  }
  return total.real();
}

double expanded_value(const DensityOperator& rho, const ExpansionScheme& scheme,
                      const Observable& obs) {
  const double g = gamma_expect(rho, scheme);
  if (std::abs(g) < kDegenerate) {
    throw Error(ErrorKind::DegenerateNormalisation, "<Gamma> vanishes");
  }
  return obs_gamma_expect(rho, scheme, obs) / g;
}

DensityOperator expanded_density(const DensityOperator& rho,
                                 const ExpansionScheme& scheme) {
  const double g = gamma_expect(rho, scheme);
  if (std::abs(g) < kDegenerate) {
    throw Error(ErrorKind::DegenerateNormalisation, "<Gamma> vanishes");
  }
  const Matrix gamma = expansion_operator(scheme).to_matrix();
  return DensityOperator::unit_trace(rho.num_qubits(), gamma * rho.matrix() / g);
}

SchemeReport scheme_report(const DensityOperator& rho, const PureState& psi0,
                           const ExpansionScheme& scheme, const SymmetrySet& group,
                           const Observable& obs) {
  if (!group.is_group()) {
    throw Error(ErrorKind::InvalidArgument, "reference set is not a group");
  }
  SchemeReport r;
  r.gamma_expect = gamma_expect(rho, scheme);
  if (!(r.gamma_expect > 0.0)) {
    throw Error(ErrorKind::NonPositiveGamma,
                "<Gamma> = " + std::to_string(r.gamma_expect) + " is not positive");
  }
  const double pi = gamma_expect(rho, ExpansionScheme::uniform(group));
  const double f0 = fidelity_with_pure(rho, psi0);
  r.fidelity = f0 / r.gamma_expect;
  r.b_undet = (pi - f0) / r.gamma_expect;
  r.b_det = (r.gamma_expect - pi) / r.gamma_expect;
  r.abs_infidelity = std::abs(1.0 - r.fidelity);
  r.cost = 1.0 / (r.gamma_expect * r.gamma_expect);
  r.obs_value = obs_gamma_expect(rho, scheme, obs) / r.gamma_expect;
  const double ideal = psi0.expect(obs);
  if (std::abs(ideal) < kDegenerate) {
    throw Error(ErrorKind::DegenerateNormalisation, "ideal <O> vanishes");
  }
  r.rel_bias_obs = 1.0 - r.obs_value / ideal;
  return r;
}

SchemeReport scheme_report(const SimulationResult& result,
                           const ExpansionScheme& scheme, const SymmetrySet& group,
                           const Observable& obs) {
  return scheme_report(result.rho, result.rho0, scheme, group, obs);
}

SimpleBiases simple_example_biases(double p_u, double p_d) {
  if (!(p_u >= 0.0 && p_d >= 0.0 && p_u + p_d <= 1.0 + 1e-12)) {
    throw Error(ErrorKind::BadProbability, "need p_u, p_d >= 0 and p_u + p_d <= 1");
  }
  if (std::abs(1.0 - 2.0 * p_d) < 1e-15 || std::abs(1.0 - p_d) < 1e-15) {
    throw Error(ErrorKind::SingularDenominator, "p_d makes a denominator vanish");
  }
  return {p_u + p_d, p_u / (1.0 - p_d),
          std::abs(p_u - p_d) / std::abs(1.0 - 2.0 * p_d)};
}

CrossoverReport crossover_samples(double c_a, double eps_a, double c_b, double eps_b) {
  const double denom = eps_b * eps_b - eps_a * eps_a;
  if (std::abs(denom) < 1e-15) {
    throw Error(ErrorKind::EqualBiases, "schemes have equal bias magnitudes");
  }
  return {(c_a - c_b) / denom, c_a, c_b, eps_a, eps_b};
}

CrossoverReport crossover_samples(const SchemeReport& a, const SchemeReport& b) {
  return crossover_samples(a.cost, a.abs_infidelity, b.cost, b.abs_infidelity);
}

PauliString conjugate(const Conjugator& s, const PauliString& g) {
  if (const auto* p = std::get_if<PauliString>(&s)) {
    return p->commutes_with(g) ? g : -g;
  }
  const auto& perm = std::get<QubitPermutation>(s).perm;
  if (perm.size() != g.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "permutation size differs");
  }
  PauliString out = PauliString(g.num_qubits()).with_sign(g.sign());
  for (std::size_t q = 0; q < perm.size(); ++q) {
    out = out.with_letter(perm[q], g.letter(q));
  }
  return out;
}

std::vector<EquivalenceClass> equivalence_partition(
    const SymmetrySet& group, const std::vector<Conjugator>& conjugators) {
  const std::size_t n = group.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& s : conjugators) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = group.index_of(conjugate(s, group[i]));
      if (!j) continue;
      const std::size_t a = find(i), b = find(*j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<EquivalenceClass> classes;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == n) {
      slot[root] = classes.size();
      classes.push_back({group[i], {}});
    }
    classes[slot[root]].members.push_back(group[i]);
  }
  return classes;
}

std::vector<EquivalenceClass> equivalence_partition(const SymmetrySet& group,
                                                    const SymmetrySet& commuting_sym) {
  std::vector<Conjugator> c(commuting_sym.elements().begin(),
                            commuting_sym.elements().end());
  return equivalence_partition(group, c);
}

NoiselessDecomposition noiseless_decomposition(const DensityOperator& rho_w,
                                               const PureState& psi0) {
  if (rho_w.num_qubits() != psi0.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "state sizes differ");
  }
  const Vector& a = psi0.amplitudes();
  const cplx overlap = a.dot(rho_w.matrix() * a);
  if (std::abs(1.0 - overlap) < 1e-12) {
    throw Error(ErrorKind::UnitFidelity, "state has no erroneous component");
  }
  Matrix err = rho_w.matrix() - a * (a.adjoint() * rho_w.matrix());
  err /= (1.0 - overlap);
  return {overlap.real(), DensityOperator::unit_trace(rho_w.num_qubits(), std::move(err))};
}

}  // namespace symex
