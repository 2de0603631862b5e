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


#include "symex/shots.hpp"

#include <array>
#include <cmath>

#include "symex/errors.hpp"

namespace symex {
namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Index of the first cumulative bound above a uniform draw.
std::size_t draw_index(std::mt19937_64& rng, const std::vector<double>& cumulative) {
  const double u = uniform01(rng) * cumulative.back();
  for (std::size_t i = 0; i + 1 < cumulative.size(); ++i) {
    if (u < cumulative[i]) return i;
  }
  return cumulative.size() - 1;
}

void check_commuting(const SymmetrySet& ops, const PauliString& obs) {
  if (obs.num_qubits() != ops.num_qubits()) {
    throw Error(ErrorKind::DimensionMismatch, "observable and symmetries differ");
  }
  for (const auto& g : ops.elements()) {
    if (!obs.commutes_with(g)) {
      throw Error(ErrorKind::NonCommutingObservable,
                  obs.str() + " does not commute with " + g.str());
    }
  }
}

// Joint outcome table in the order (+,+), (+,-), (-,+), (-,-), cumulative.
std::vector<double> cumulative_joint(double m_ab_first, double m_b, double m_prod) {
  // P(a, b) = (1 + a <A> + b <B> + a b <AB>) / 4
  std::vector<double> cum(4);
  double acc = 0.0;
  const int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (int k = 0; k < 4; ++k) {
    const int a = signs[k][0], b = signs[k][1];
    acc += std::max(0.0, (1.0 + a * m_ab_first + b * m_b + a * b * m_prod) / 4.0);
    cum[k] = acc;
  }
  return cum;
}

double sample_variance(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(xs.size() - 1);
}

}  // namespace

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

std::vector<ShotRecord> sample_expansion_shots(const DensityOperator& rho,
                                               const ExpansionScheme& scheme,
                                               const PauliString& obs, std::size_t n,
                                               std::uint64_t seed) {
  std::mt19937_64 rng = make_stream(seed, 0);
  return sample_expansion_shots(rho, scheme, obs, n, rng);
}

std::vector<ShotRecord> sample_expansion_shots(const DensityOperator& rho,
                                               const ExpansionScheme& scheme,
                                               const PauliString& obs, std::size_t n,
                                               std::mt19937_64& rng) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "need at least one shot");
  const SymmetrySet& ops = scheme.ops();
  check_commuting(ops, obs);
  const Observable o(obs);
  const double o_mean = expect(rho, o);

  std::vector<double> pick;
  double acc = 0.0;
  for (double w : scheme.normalised_weights()) pick.push_back(acc += w);

  std::vector<std::vector<double>> joint;
  for (const auto& g : ops.elements()) {
    const double og = expect(rho, Observable(pauli_mul(obs, g)));
    joint.push_back(cumulative_joint(og, expect(rho, Observable(g)), o_mean));
  }

  std::vector<ShotRecord> out(n);
  for (auto& rec : out) {
    rec.which_g = draw_index(rng, pick);
    const std::size_t k = draw_index(rng, joint[rec.which_g]);
    rec.og_outcome = k < 2 ? 1 : -1;
    rec.g_outcome = k % 2 == 0 ? 1 : -1;
  }
  return out;
}

double ratio_estimate(const std::vector<ShotRecord>& records) {
  long long sum_g = 0, sum_og = 0;
  for (const auto& r : records) {
    sum_g += r.g_outcome;
    sum_og += r.og_outcome;
  }
  if (sum_g == 0) throw Error(ErrorKind::ZeroDenominator, "mean of g is zero");
  return static_cast<double>(sum_og) / static_cast<double>(sum_g);
}

double quotient_variance(const QuotientStats& s, std::size_t n) {
  if (s.mean_b == 0.0) {
    throw Error(ErrorKind::ZeroMeanDenominator, "<B> is zero");
  }
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const double c = s.mean_a / s.mean_b;
  return (s.var_a - 2.0 * c * s.cov_ab + c * c * s.var_b) /
         (static_cast<double>(n) * s.mean_b * s.mean_b);
}

double bootstrap_ratio_variance(const std::vector<ShotRecord>& records,
                                std::size_t resamples, std::uint64_t seed) {
  if (records.empty() || resamples < 2) {
    throw Error(ErrorKind::InvalidArgument, "bootstrap needs records and >= 2 resamples");
  }
  std::mt19937_64 rng = make_stream(seed, 0);
  const std::size_t n = records.size();
  std::vector<double> estimates;
  estimates.reserve(resamples);
  for (std::size_t r = 0; r < resamples; ++r) {
    long long sum_g = 0, sum_og = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& rec = records[static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n))];
      sum_g += rec.g_outcome;
      sum_og += rec.og_outcome;
    }
    if (sum_g == 0) continue;
    estimates.push_back(static_cast<double>(sum_og) / static_cast<double>(sum_g));
  }
  return sample_variance(estimates);
}

double predicted_expansion_variance(const DensityOperator& rho,
                                    const ExpansionScheme& scheme,
                                    const PauliString& obs, std::size_t n) {
  check_commuting(scheme.ops(), obs);
  const double gamma = gamma_expect(rho, scheme);
  const double o_w = expanded_value(rho, scheme, Observable(obs));
  const double o = expect(rho, Observable(obs));
  return (1.0 - 2.0 * o_w * o + o_w * o_w) /
         (static_cast<double>(n) * gamma * gamma);
}

double predicted_direct_variance(const DensityOperator& rho, const SymmetrySet& group,
                                 const PauliString& obs, std::size_t n) {
  check_commuting(group, obs);
  const auto proj = ExpansionScheme::uniform(group);
  const double pi = gamma_expect(rho, proj);
  const double o_dir = expanded_value(rho, proj, Observable(obs));
  return (1.0 - o_dir * o_dir) / (static_cast<double>(n) * pi);
}

double sample_direct_estimate(const DensityOperator& rho, const SymmetrySet& group,
                              const PauliString& obs, std::size_t n,
                              std::mt19937_64& rng) {
  if (!group.is_group()) {
    throw Error(ErrorKind::InvalidArgument, "direct verification needs a group");
  }
  check_commuting(group, obs);
  const auto proj = ExpansionScheme::uniform(group);
  const double pi = gamma_expect(rho, proj);
  const double o_pi = obs_gamma_expect(rho, proj, Observable(obs));
  const double o = expect(rho, Observable(obs));
  // Outcomes (pass, o=+1), (pass, o=-1), (fail, +1), (fail, -1).
  const std::array<double, 4> p = {(pi + o_pi) / 2.0, (pi - o_pi) / 2.0,
                                   (1.0 - pi + o - o_pi) / 2.0,
                                   (1.0 - pi - o + o_pi) / 2.0};
  std::vector<double> cum(4);
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) cum[k] = acc += std::max(0.0, p[k]);
  long long pass = 0, sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = draw_index(rng, cum);
    if (k < 2) {
      ++pass;
      sum += k == 0 ? 1 : -1;
    }
  }
  if (pass == 0) throw Error(ErrorKind::ZeroDenominator, "no run passed verification");
  return static_cast<double>(sum) / static_cast<double>(pass);
}

VarianceReport verify_cost_formulas(const DensityOperator& rho,
                                    const ExpansionScheme& scheme,
                                    const PauliString& obs, std::size_t n,
                                    std::size_t trials, std::uint64_t seed,
                                    Estimator estimator) {
  if (n == 0 || trials < 2) {
    throw Error(ErrorKind::InvalidArgument, "need n >= 1 and trials >= 2");
  }
  std::vector<double> estimates;
  estimates.reserve(trials);
  VarianceReport rep;
  rep.n = n;
  if (estimator == Estimator::Expansion) {
    rep.predicted_var = predicted_expansion_variance(rho, scheme, obs, n);
    for (std::size_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng = make_stream(seed, t);
      estimates.push_back(ratio_estimate(sample_expansion_shots(rho, scheme, obs, n, rng)));
    }
  } else {
    rep.predicted_var = predicted_direct_variance(rho, scheme.ops(), obs, n);
    for (std::size_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng = make_stream(seed, t);
      estimates.push_back(sample_direct_estimate(rho, scheme.ops(), obs, n, rng));
    }
  }
  double mean = 0.0;
  for (double e : estimates) mean += e;
  rep.mean_estimate = mean / static_cast<double>(trials);
  rep.empirical_var = sample_variance(estimates);
  const double stderr_var =
      rep.predicted_var * std::sqrt(2.0 / static_cast<double>(trials - 1));
  rep.z_score = std::abs(rep.empirical_var - rep.predicted_var) / stderr_var;
  return rep;
}

}  // namespace symex
