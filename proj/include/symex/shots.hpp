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
#include <cstdint>
#include <random>
#include <vector>

#include "symex/symmetry.hpp"

namespace symex {

/// One run of the expansion estimator: symmetry `which_g` was sampled and the
/// commuting pair (O G, G) measured.
struct ShotRecord {
  int g_outcome = 1;
  int og_outcome = 1;
  std::size_t which_g = 0;
};

struct VarianceReport {
  double empirical_var = 0.0;
  double predicted_var = 0.0;
  std::size_t n = 1;
  double z_score = 0.0;
  double mean_estimate = 0.0;  ///< average of the per-trial estimates
};

/// Statistics of a pair of random variables A, B and the quotient C = A / B.
struct QuotientStats {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  double cov_ab = 0.0;
};

/// Deterministic per-stream generator seeded from (seed, stream).
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream);

std::vector<ShotRecord> sample_expansion_shots(const DensityOperator& rho,
                                               const ExpansionScheme& scheme,
                                               const PauliString& obs, std::size_t n,
                                               std::uint64_t seed);
std::vector<ShotRecord> sample_expansion_shots(const DensityOperator& rho,
                                               const ExpansionScheme& scheme,
                                               const PauliString& obs, std::size_t n,
                                               std::mt19937_64& rng);

/// mean(og) / mean(g). Throws ZeroDenominator.
double ratio_estimate(const std::vector<ShotRecord>& records);

/// (1 / (n <B>^2)) [Var A - 2 <C> Cov(A,B) + <C>^2 Var B].
double quotient_variance(const QuotientStats& stats, std::size_t n);

/// Variance of ratio_estimate over `resamples` bootstrap resamples.
double bootstrap_ratio_variance(const std::vector<ShotRecord>& records,
                                std::size_t resamples, std::uint64_t seed);

/// (1 - 2 <O_w><O> + <O_w>^2) / (n <Gamma_w>^2).
double predicted_expansion_variance(const DensityOperator& rho,
                                    const ExpansionScheme& scheme,
                                    const PauliString& obs, std::size_t n);

/// (1 - <O_dir>^2) / (n <Pi>), O_dir the post-selected mean over `group`.
double predicted_direct_variance(const DensityOperator& rho, const SymmetrySet& group,
                                 const PauliString& obs, std::size_t n);

/// Post-selected estimate from n runs: each run reports (o, pass) with pass the
/// joint +1 outcome of every group element. Returns the mean of o over passing
/// runs; throws ZeroDenominator when nothing passes.
double sample_direct_estimate(const DensityOperator& rho, const SymmetrySet& group,
                              const PauliString& obs, std::size_t n,
                              std::mt19937_64& rng);

enum class Estimator { Expansion, DirectVerification };

/// `trials` independent estimates of n shots; z = |emp - pred| / stderr with
/// stderr = pred sqrt(2 / (trials - 1)). DirectVerification requires
/// scheme.ops() to be a group and ignores the weights.
VarianceReport verify_cost_formulas(const DensityOperator& rho,
                                    const ExpansionScheme& scheme,
                                    const PauliString& obs, std::size_t n,
                                    std::size_t trials, std::uint64_t seed,
                                    Estimator estimator = Estimator::Expansion);

}  // namespace symex
