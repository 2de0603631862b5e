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
#include <map>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "symex/hubbard.hpp"
#include "symex/noise.hpp"
#include "symex/symmetry.hpp"

namespace symex {

using Rational = boost::rational<long long>;

/// Location-averaged fraction of error components each symmetry detects.
struct DetectableFractions {
  std::map<PauliString, double> f;
  double f_eps = 1.0;  ///< effective damaging fraction

  /// Throws MissingFraction when g has no entry.
  double at(const PauliString& g) const;
};

double poisson_p0(double mu);

/// e^{-2 f mu}.
double predict_symmetry_expect(double f_g, double mu);

/// sum_G w_G e^{-2 f_G mu} / sum_G w_G.
double predict_gamma(const ExpansionScheme& scheme, const DetectableFractions& fractions,
                     double mu);

/// (1/|G|) sum_G e^{-2 f_G mu}; the list includes f_I = 0.
double predict_projector(const std::vector<double>& group_fractions, double mu);

/// prod over generators of (1 + e^{-2 f mu}) / 2, valid when the generators
/// detect disjoint sets of errors.
double predict_projector_independent(const std::vector<double>& generator_fractions,
                                     double mu);

/// Nominal values: depolarising {I: 0, up: 2/5, down: 2/5, tot: 8/15};
/// bit-flip {0, 1/2, 1/2, 1}. Keys are the sign-corrected symmetries.
DetectableFractions detectable_fractions(NoiseKind kind, const LatticeSpec& lattice);

/// Exact fractions for {I, up, down, tot} from enumerating the Pauli error
/// components of three gate classes (across spins, within up, within down)
/// weighted 1/2, 1/4, 1/4.
std::vector<Rational> brute_force_fractions(NoiseKind kind);

/// Exact fractions for {I, up, down, tot} averaged over the actual noise
/// locations of `circuit`.
std::vector<Rational> circuit_fractions(const NoisyCircuit& circuit, NoiseKind kind);

struct BiasCost {
  double first_order_bias = 0.0;  ///< |sum (2 f_F - f_eps)| mu / |F|
  double exact_bias = 0.0;        ///< |1 - |F| e^{-f_eps mu} / sum e^{-2 f_F mu}|
  double cost = 0.0;              ///< |F|^2 / (sum e^{-2 f_F mu})^2
};

BiasCost predicted_bias_and_cost(const SymmetrySet& set,
                                 const DetectableFractions& fractions, double mu);

enum class SearchMode { Measured, Analytic };

struct Candidate {
  std::uint64_t mask = 0;  ///< bit i selects the i-th element of the threshold set
  SymmetrySet set;
  double objective = 0.0;
  double gamma = 0.0;  ///< measured or predicted <Gamma_F>
};

struct SearchResult {
  SymmetrySet threshold_set;
  std::vector<Candidate> candidate_sets;
  SymmetrySet chosen;
  double predicted_bias = 0.0;
  double predicted_cost = 0.0;
  double delta = 0.0;
};

/// Small-bias search. The threshold set holds every G with <G> inside
/// [e^{-f_eps mu}/(1+delta), e^{-f_eps mu}/(1-delta)] (1e-12 slack). Every
/// non-empty subset is scored by |<Gamma_F> - e^{-f_eps mu}| (measured) or by
/// the first-order bias (analytic). Ties within 1e-9 prefer larger <Gamma_F>,
/// then fewer elements, then the earlier subset mask. `delta` defaults to the
/// predicted verification bias over `group`. Throws EmptyThresholdSet.
SearchResult search_small_bias(
    const SymmetrySet& group, const DetectableFractions& fractions, double mu,
    std::optional<double> delta, SearchMode mode,
    const std::optional<std::map<PauliString, double>>& measured_expects = std::nullopt);

}  // namespace symex
