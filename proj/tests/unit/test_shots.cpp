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


#include <cmath>

#include <gtest/gtest.h>

#include "symex/errors.hpp"
#include "symex/shots.hpp"
#include "symex/symmetry.hpp"

namespace symex {
namespace {

// Diagonal 2-qubit state from the four basis probabilities.
DensityOperator diag_state(double p0, double p1, double p2, double p3) {
  Matrix m = Matrix::Zero(4, 4);
  m.diagonal() << p0, p1, p2, p3;
  return DensityOperator(2, m);
}

const PauliString kO = PauliString::parse("ZI");
const PauliString kG = PauliString::parse("ZZ");

SymmetrySet pair_group() { return SymmetrySet({PauliString::parse("II"), kG}); }

// <ZI> = 0.2, <IZ> = 0.5, <ZZ> = 0.6: the scheme {ZZ} alone has a visible
// ratio-estimator bias of about 1.76 / n.
DensityOperator skewed_state() { return diag_state(0.575, 0.175, 0.025, 0.225); }

TEST(Sampling, StabiliserAlwaysPasses) {
  const auto rho = DensityOperator::from_pure(PureState::basis(2, 0));
  const auto recs = sample_expansion_shots(rho, ExpansionScheme::uniform(pair_group()), kO, 500, 3);
  for (const auto& r : recs) {
    EXPECT_EQ(r.g_outcome, 1);
    EXPECT_EQ(r.og_outcome, 1);
  }
}

TEST(Sampling, UnmitigatedMean) {
  const auto rho = diag_state(0.5, 0.1, 0.15, 0.25);
  const double o = expect(rho, kO);
  const std::size_t n = 20000;
  const auto recs = sample_expansion_shots(
      rho, ExpansionScheme::uniform(SymmetrySet({PauliString::parse("II")})), kO, n, 9);
  double mean = 0.0;
  for (const auto& r : recs) {
    EXPECT_EQ(r.g_outcome, 1);
    mean += r.og_outcome;
  }
  mean /= static_cast<double>(n);
  EXPECT_LT(std::abs(mean - o), 3.0 * std::sqrt((1 - o * o) / static_cast<double>(n)));
}

TEST(Sampling, RatioConvergesToExpandedValue) {
  const auto rho = diag_state(0.5, 0.1, 0.15, 0.25);
  const auto scheme = ExpansionScheme(pair_group(), {1.0, 2.0});
  const std::size_t n = 100000;
  const double exact = expanded_value(rho, scheme, kO);
  const double sigma = std::sqrt(predicted_expansion_variance(rho, scheme, kO, n));
  const double est = ratio_estimate(sample_expansion_shots(rho, scheme, kO, n, 21));
  EXPECT_LT(std::abs(est - exact), 3.0 * sigma);
}

TEST(Sampling, Deterministic) {
  const auto rho = skewed_state();
  const auto scheme = ExpansionScheme::uniform(pair_group());
  const auto a = sample_expansion_shots(rho, scheme, kO, 100, 5);
  const auto b = sample_expansion_shots(rho, scheme, kO, 100, 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].og_outcome, b[i].og_outcome);
    EXPECT_EQ(a[i].g_outcome, b[i].g_outcome);
    EXPECT_EQ(a[i].which_g, b[i].which_g);
  }
}

TEST(Sampling, RejectsAnticommutingObservable) {
  const auto rho = skewed_state();
  try {
    sample_expansion_shots(rho, ExpansionScheme::uniform(pair_group()), PauliString::parse("XI"),
                           10, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonCommutingObservable);
  }
}

TEST(RatioEstimate, Examples) {
  std::vector<ShotRecord> ones(7, ShotRecord{1, 1, 0});
  EXPECT_EQ(ratio_estimate(ones), 1.0);
  std::vector<ShotRecord> alt;
  for (int i = 0; i < 10; ++i) alt.push_back({1, i % 2 ? 1 : -1, 0});
  EXPECT_EQ(ratio_estimate(alt), 0.0);
  // means (0.3, 0.6) over 20 records
  std::vector<ShotRecord> s;
  for (int i = 0; i < 20; ++i) s.push_back({i < 16 ? 1 : -1, i < 13 ? 1 : -1, 0});
  EXPECT_DOUBLE_EQ(ratio_estimate(s), 0.5);
  std::vector<ShotRecord> zero = {{1, 1, 0}, {-1, 1, 0}};
  EXPECT_THROW(ratio_estimate(zero), Error);
}

TEST(QuotientVariance, ZeroMoments) {
  EXPECT_EQ(quotient_variance(QuotientStats{0.4, 0.8, 0.0, 0.0, 0.0}, 100), 0.0);
  EXPECT_THROW(quotient_variance(QuotientStats{0.4, 0.0, 0.1, 0.1, 0.0}, 100), Error);
}

TEST(QuotientVariance, ReducesToExpansionFormula) {
  // Per-shot A = OG and B = G are +-1 with E[AB] = <O>.
  const auto rho = diag_state(0.5, 0.1, 0.15, 0.25);
  const auto scheme = ExpansionScheme::uniform(pair_group());
  const double gam = gamma_expect(rho, scheme);
  const double og = obs_gamma_expect(rho, scheme, kO);
  const double o = expect(rho, kO);
  const QuotientStats st{og, gam, 1 - og * og, 1 - gam * gam, o - og * gam};
  EXPECT_NEAR(quotient_variance(st, 1000), predicted_expansion_variance(rho, scheme, kO, 1000),
              1e-15);
}

TEST(QuotientVariance, MatchesBootstrap) {
  const auto rho = diag_state(0.5, 0.1, 0.15, 0.25);
  const auto scheme = ExpansionScheme::uniform(pair_group());
  const std::size_t n = 2000;
  const auto recs = sample_expansion_shots(rho, scheme, kO, n, 77);
  double ma = 0, mb = 0, maa = 0, mbb = 0, mab = 0;
  for (const auto& r : recs) {
    ma += r.og_outcome;
    mb += r.g_outcome;
    maa += 1;
    mbb += 1;
    mab += r.og_outcome * r.g_outcome;
  }
  const double dn = static_cast<double>(n);
  ma /= dn;
  mb /= dn;
  mab /= dn;
  const QuotientStats st{ma, mb, maa / dn - ma * ma, mbb / dn - mb * mb, mab - ma * mb};
  const double analytic = quotient_variance(st, n);
  const double boot = bootstrap_ratio_variance(recs, 10000, 4);
  EXPECT_NEAR(boot / analytic, 1.0, 0.10);
}

TEST(PredictedVariance, DirectAtHalfProjector) {
  const auto rho = DensityOperator::maximally_mixed(2);
  EXPECT_NEAR(predicted_direct_variance(rho, pair_group(), kO, 500), 2.0 / 500, 1e-15);
}

TEST(PredictedVariance, UnmitigatedReduction) {
  const auto rho = diag_state(0.5, 0.1, 0.15, 0.25);
  const double o = expect(rho, kO);
  const auto unmit = ExpansionScheme::uniform(SymmetrySet({PauliString::parse("II")}));
  EXPECT_NEAR(predicted_expansion_variance(rho, unmit, kO, 100), (1 - o * o) / 100, 1e-15);
}

TEST(VerifyCost, ExpansionZScore) {
  for (const auto& rho : {diag_state(0.4, 0.1, 0.1, 0.4), diag_state(0.5, 0.1, 0.15, 0.25)}) {
    const auto rep = verify_cost_formulas(rho, ExpansionScheme::uniform(SymmetrySet({kG})), kO,
                                          10000, 200, 3);
    EXPECT_LT(std::abs(rep.z_score), 3.0);
  }
}

TEST(VerifyCost, DirectZScore) {
  const auto rho = diag_state(0.5, 0.1, 0.15, 0.25);
  const auto rep = verify_cost_formulas(rho, ExpansionScheme::uniform(pair_group()), kO, 10000,
                                        200, 8, Estimator::DirectVerification);
  EXPECT_LT(std::abs(rep.z_score), 3.0);
}

TEST(VerifyCost, CostRatios) {
  const auto rho = diag_state(0.4, 0.1, 0.1, 0.4);
  const double o = expect(rho, kO);
  const std::size_t n = 10000;
  const auto group = pair_group();
  const auto exp = verify_cost_formulas(rho, ExpansionScheme::uniform(SymmetrySet({kG})), kO, n,
                                        200, 12);
  const double gam = expect(rho, kG);
  EXPECT_NEAR(exp.empirical_var * n / (1 - o * o) * gam * gam, 1.0, 0.15);
  const auto dir = verify_cost_formulas(rho, ExpansionScheme::uniform(group), kO, n, 200, 13,
                                        Estimator::DirectVerification);
  const double pi = gamma_expect(rho, ExpansionScheme::uniform(group));
  EXPECT_NEAR(dir.empirical_var * n / (1 - o * o) * pi, 1.0, 0.15);
}

TEST(VerifyCost, DirectNeedsGroup) {
  EXPECT_THROW(verify_cost_formulas(skewed_state(), ExpansionScheme::uniform(SymmetrySet({kG})),
                                    kO, 100, 10, 1, Estimator::DirectVerification),
               Error);
}

TEST(RatioEstimate, ErrorShrinksWithShots) {
  const auto rho = skewed_state();
  const auto scheme = ExpansionScheme::uniform(SymmetrySet({kG}));
  const double exact = expanded_value(rho, scheme, kO);
  ASSERT_NEAR(exact, 0.5 / 0.6, 1e-12);
  double prev = 1e9;
  for (std::size_t n : {100u, 1000u, 10000u}) {
    const std::size_t trials = 4000;
    double mean = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      auto rng = make_stream(40 + n, t);
      mean += ratio_estimate(sample_expansion_shots(rho, scheme, kO, n, rng));
    }
    mean /= static_cast<double>(trials);
    const double bias = std::abs(mean - exact);
    EXPECT_LT(bias, prev) << n;
    prev = bias;
  }
}

}  // namespace
}  // namespace symex
