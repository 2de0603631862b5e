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


#include <random>

#include <gtest/gtest.h>

#include "symex/errors.hpp"
#include "symex/hubbard.hpp"
#include "symex/simulator.hpp"
#include "symex/symmetry.hpp"
#include "test_util.hpp"

namespace symex {
namespace {

using namespace symex::testing;

SymmetrySet hubbard_group() { return symmetries(LatticeSpec::parse("2x2")).group(); }

// 2 qubits, G = Z on qubit 0, psi0 = |00>. Weight 0.37 on |00>, 0.19 on the
// other G = +1 state and 0.44 on a G = -1 state.
struct Synthetic {
  DensityOperator rho;
  PureState psi0;
  SymmetrySet group;
};

Synthetic synthetic() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 0.37;
  m(2, 2) = 0.19;
  m(1, 1) = 0.44;
  return {DensityOperator(2, m), PureState::basis(2, 0),
          SymmetrySet({PauliString::parse("II"), PauliString::parse("ZI")})};
}

class NoisyHubbard : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    const auto c = build_circuit(LatticeSpec::parse("2x2"), 5, 6);
    dep_ = new SimulationResult(simulate(c, NoiseKind::Depolarising2Q, 1.0));
    flip_ = new SimulationResult(simulate(c, NoiseKind::BitFlip1Q, 1.5));
  }
  static void TearDownTestSuite() {
    delete dep_;
    delete flip_;
  }
  static SimulationResult* dep_;
  static SimulationResult* flip_;
};
SimulationResult* NoisyHubbard::dep_ = nullptr;
SimulationResult* NoisyHubbard::flip_ = nullptr;

TEST(ExpansionOperator, UnmitigatedIsIdentity) {
  const auto g = hubbard_group();
  const auto op = expansion_operator(ExpansionScheme::uniform(g.subset(1)));
  EXPECT_LT((op.to_matrix() - Matrix::Identity(256, 256)).norm(), 1e-14);
}

TEST(ExpansionOperator, FullGroupIsProjector) {
  const auto g = hubbard_group();
  const Matrix pi = expansion_operator(ExpansionScheme::uniform(g)).to_matrix();
  EXPECT_LT((pi * pi - pi).norm(), 1e-12);
  // Independent form: product of (I + G)/2 over the two generators.
  const Matrix id = Matrix::Identity(256, 256);
  const Matrix expected = (id + g[1].to_matrix()) * (id + g[2].to_matrix()) / 4.0;
  EXPECT_LT((pi - expected).norm(), 1e-12);
}

TEST(ExpansionOperator, DownTotAverage) {
  const auto g = hubbard_group();
  const Matrix op = expansion_operator(ExpansionScheme::uniform(g.subset(0b1100))).to_matrix();
  EXPECT_LT((op - (g[2].to_matrix() + g[3].to_matrix()) / 2.0).norm(), 1e-14);
}

TEST(ExpansionScheme, Validation) {
  const auto g = hubbard_group();
  EXPECT_THROW(ExpansionScheme(g, {1.0, -1.0, 1.0, 1.0}), Error);
  EXPECT_THROW(ExpansionScheme(g, {1.0, 1.0}), Error);
  try {
    ExpansionScheme(g, {0.0, 0.0, 0.0, 0.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroWeightSum);
  }
  const auto w = ExpansionScheme(g, {2.0, 0.0, 1.0, 1.0}).normalised_weights();
  EXPECT_DOUBLE_EQ(w[0], 0.5);
  EXPECT_DOUBLE_EQ(w[3], 0.25);
}

TEST_F(NoisyHubbard, UnmitigatedValueIsPlainExpectation) {
  const auto g = hubbard_group();
  const auto h = energy_observable(LatticeSpec::parse("2x2"));
  EXPECT_NEAR(expanded_value(dep_->rho, ExpansionScheme::uniform(g.subset(1)), h),
              expect(dep_->rho, h), 1e-12);
}

TEST_F(NoisyHubbard, ExpandedValueMatchesDenseFormula) {
  const auto g = hubbard_group();
  const auto h = energy_observable(LatticeSpec::parse("2x2"));
  const Matrix hm = h.to_matrix();
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    const auto scheme = ExpansionScheme::uniform(g.subset(mask));
    const Matrix gam = expansion_operator(scheme).to_matrix();
    const Matrix& rho = dep_->rho.matrix();
    const double gexp = (gam * rho).trace().real();
    if (std::abs(gexp) < 1e-6) continue;
    const double expected = (hm * gam * rho).trace().real() / gexp;
    EXPECT_NEAR(expanded_value(dep_->rho, scheme, h), expected, 1e-10) << mask;
    EXPECT_NEAR(gamma_expect(dep_->rho, scheme), gexp, 1e-12);
  }
}

TEST(ExpandedValue, StateInsideSubspaceIsUnchanged) {
  const auto g = hubbard_group();
  const auto psi = ideal_state(build_circuit(LatticeSpec::parse("2x2"), 1, 3));
  const auto rho = DensityOperator::from_pure(psi);
  const auto h = energy_observable(LatticeSpec::parse("2x2"));
  EXPECT_NEAR(expanded_value(rho, ExpansionScheme::uniform(g), h), expect(rho, h), 1e-12);
}

TEST(ExpandedValue, DegenerateNormalisation) {
  const auto rho = DensityOperator::from_pure(PureState::basis(1, 1));
  const SymmetrySet set({PauliString::parse("I"), PauliString::parse("Z")});
  try {
    expanded_value(rho, ExpansionScheme::uniform(set), PauliString::parse("Z"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateNormalisation);
  }
}

TEST(ExpandedDensity, UnitTrace) {
  const auto s = synthetic();
  const auto rw = expanded_density(s.rho, ExpansionScheme(s.group, {3.0, 5.0}));
  EXPECT_NEAR(std::abs(rw.matrix().trace() - 1.0), 0.0, 1e-12);
}

TEST(SchemeReport, SyntheticThreeLevelState) {
  const auto s = synthetic();
  const auto rep = scheme_report(s.rho, s.psi0, ExpansionScheme(s.group, {3.0, 5.0}), s.group,
                                 PauliString::parse("ZZ"));
  EXPECT_NEAR(rep.gamma_expect, 0.45, 1e-12);
  EXPECT_NEAR(rep.b_undet, 0.19 / 0.45, 1e-12);
  EXPECT_NEAR(rep.b_undet, 0.4222, 1e-4);
  EXPECT_NEAR(rep.b_det, -0.11 / 0.45, 1e-12);
  EXPECT_NEAR(rep.b_det, -0.2444, 1e-4);
  EXPECT_NEAR(rep.abs_infidelity, 0.1778, 1e-4);
  EXPECT_NEAR(rep.fidelity, 0.37 / 0.45, 1e-12);
  EXPECT_NEAR(rep.cost, 1.0 / (0.45 * 0.45), 1e-10);
}

TEST(SchemeReport, Preconditions) {
  const auto s = synthetic();
  const SymmetrySet not_group({PauliString::parse("ZI")});
  EXPECT_THROW(scheme_report(s.rho, s.psi0, ExpansionScheme::uniform(s.group), not_group,
                             PauliString::parse("ZZ")),
               Error);
  Matrix m = Matrix::Zero(4, 4);
  m(1, 1) = 1.0;
  try {
    scheme_report(DensityOperator(2, m), s.psi0,
                  ExpansionScheme(s.group, {1.0, 3.0}), s.group, PauliString::parse("ZZ"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPositiveGamma);
  }
}

TEST_F(NoisyHubbard, UnmitigatedBiasesSumToInfidelity) {
  const auto g = hubbard_group();
  const auto h = energy_observable(LatticeSpec::parse("2x2"));
  const auto rep = scheme_report(*dep_, ExpansionScheme::uniform(g.subset(1)), g, h);
  EXPECT_NEAR(rep.b_undet + rep.b_det, 1.0 - fidelity_with_pure(dep_->rho, dep_->rho0), 1e-12);
  EXPECT_NEAR(rep.gamma_expect, 1.0, 1e-12);
}

TEST_F(NoisyHubbard, FullVerificationHasNoDetectableBias) {
  const auto g = hubbard_group();
  const auto h = energy_observable(LatticeSpec::parse("2x2"));
  for (const auto* r : {dep_, flip_}) {
    const auto rep = scheme_report(*r, ExpansionScheme::uniform(g), g, h);
    EXPECT_NEAR(rep.b_det, 0.0, 1e-10);
  }
}

TEST_F(NoisyHubbard, BiasSumIdentityEverySubset) {
  const auto g = hubbard_group();
  const auto h = energy_observable(LatticeSpec::parse("2x2"));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> w(0.1, 2.0);
  for (const auto* r : {dep_, flip_}) {
    for (std::uint64_t mask = 1; mask < 16; ++mask) {
      const auto set = g.subset(mask);
      std::vector<double> weights(set.size());
      for (auto& x : weights) x = w(rng);
      for (const auto& scheme : {ExpansionScheme::uniform(set), ExpansionScheme(set, weights)}) {
        const double gamma = gamma_expect(r->rho, scheme);
        EXPECT_GE(gamma, -1.0);
        EXPECT_LE(gamma, 1.0);
        if (gamma <= 0.0) continue;
        const auto rep = scheme_report(*r, scheme, g, h);
        EXPECT_NEAR(rep.abs_infidelity, std::abs(rep.b_undet + rep.b_det), 1e-12);
      }
    }
  }
}

TEST_F(NoisyHubbard, RegionStructure) {
  const auto g = hubbard_group();
  const auto h = energy_observable(LatticeSpec::parse("2x2"));
  const double pi = gamma_expect(dep_->rho, ExpansionScheme::uniform(g));
  std::vector<SchemeReport> reps;
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    const auto scheme = ExpansionScheme::uniform(g.subset(mask));
    if (gamma_expect(dep_->rho, scheme) > 0.0) reps.push_back(scheme_report(*dep_, scheme, g, h));
  }
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.gamma_expect > b.gamma_expect; });
  for (std::size_t i = 1; i < reps.size(); ++i) {
    EXPECT_GE(reps[i].b_undet, reps[i - 1].b_undet - 1e-12);
    EXPECT_LE(reps[i].b_det, reps[i - 1].b_det + 1e-12);
  }
  for (const auto& r : reps) {
    if (std::abs(r.gamma_expect - pi) < 1e-12) continue;
    EXPECT_EQ(r.b_det > 0.0, r.gamma_expect > pi);
  }
}

TEST_F(NoisyHubbard, VerificationBeatsUnmitigated) {
  const auto g = hubbard_group();
  const auto h = energy_observable(LatticeSpec::parse("2x2"));
  for (const auto* r : {dep_, flip_}) {
    const auto unmit = scheme_report(*r, ExpansionScheme::uniform(g.subset(1)), g, h);
    const auto ver = scheme_report(*r, ExpansionScheme::uniform(g), g, h);
    ASSERT_LT(ver.gamma_expect, 1.0);
    EXPECT_LT(ver.abs_infidelity, unmit.abs_infidelity);
  }
}

TEST(ExpansionOperator, FixesIdealState) {
  const auto g = hubbard_group();
  const auto psi = ideal_state(build_circuit(LatticeSpec::parse("2x2"), 5, 8));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    const auto set = g.subset(mask);
    std::vector<double> weights(set.size());
    for (auto& x : weights) x = w(rng) + 0.01;
    const Matrix op = expansion_operator(ExpansionScheme(set, weights)).to_matrix();
    EXPECT_LT((op * psi.amplitudes() - psi.amplitudes()).norm(), 1e-10) << mask;
  }
}

TEST(SimpleBiases, Examples) {
  const auto zero = simple_example_biases(0.0, 0.0);
  EXPECT_EQ(zero.unmitigated, 0.0);
  EXPECT_EQ(zero.verified, 0.0);
  EXPECT_EQ(zero.expanded, 0.0);
  const auto b = simple_example_biases(0.05, 0.10);
  EXPECT_NEAR(b.unmitigated, 0.15, 1e-12);
  EXPECT_NEAR(b.verified, 0.05 / 0.9, 1e-12);
  EXPECT_NEAR(b.verified, 0.0556, 1e-4);
  EXPECT_NEAR(b.expanded, 0.0625, 1e-12);
  for (double p : {0.01, 0.1, 0.3}) EXPECT_EQ(simple_example_biases(p, p).expanded, 0.0);
}

TEST(Crossover, PublishedExamples) {
  EXPECT_NEAR(crossover_samples(6.5, 0.027, 3.2, 0.279).n_star, 42.8, 0.05);
  EXPECT_NEAR(crossover_samples(41.4, 0.063, 7.1, 0.567).n_star, 108.0, 0.5);
  EXPECT_EQ(crossover_samples(3.0, 0.1, 3.0, 0.2).n_star, 0.0);
  try {
    crossover_samples(3.0, 0.1, 2.0, 0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EqualBiases);
  }
}

TEST_F(NoisyHubbard, CrossoverFromReports) {
  const auto g = hubbard_group();
  const auto h = energy_observable(LatticeSpec::parse("2x2"));
  const auto exp = scheme_report(*dep_, ExpansionScheme::uniform(g.subset(0b1100)), g, h);
  const auto ver = scheme_report(*dep_, ExpansionScheme::uniform(g), g, h);
  const auto x = crossover_samples(exp, ver);
  EXPECT_NEAR(x.n_star, (exp.cost - ver.cost) /
                            (ver.abs_infidelity * ver.abs_infidelity -
                             exp.abs_infidelity * exp.abs_infidelity),
              1e-9);
}

TEST(Equivalence, TrivialConjugatorGivesSingletons) {
  const auto g = hubbard_group();
  const auto classes = equivalence_partition(g, SymmetrySet({PauliString(8)}));
  EXPECT_EQ(classes.size(), 4u);
}

TEST(Equivalence, SpinExchangeMergesUpAndDown) {
  const auto spec = LatticeSpec::parse("2x2");
  const auto g = symmetries(spec).group();
  const std::vector<Conjugator> s = {QubitPermutation{spin_exchange(spec)}};
  const auto classes = equivalence_partition(g, s);
  ASSERT_EQ(classes.size(), 3u);
  bool merged = false;
  for (const auto& c : classes) {
    if (c.members.size() == 2) {
      merged = c.members[0] == g[1] && c.members[1] == g[2];
    }
  }
  EXPECT_TRUE(merged);
  EXPECT_EQ(conjugate(s[0], g[1]), g[2]);
}

TEST(Equivalence, AbelianSelfConjugation) {
  const auto g = hubbard_group();
  EXPECT_EQ(equivalence_partition(g, g).size(), 4u);
  EXPECT_EQ(conjugate(Conjugator{PauliString::parse("X")}, PauliString::parse("Z")),
            PauliString::parse("-Z"));
}

TEST(NoiselessDecomposition, PureInputThrows) {
  const auto psi = PureState::basis(2, 1);
  try {
    noiseless_decomposition(DensityOperator::from_pure(psi), psi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnitFidelity);
  }
}

TEST(NoiselessDecomposition, OrthogonalSplit) {
  const auto psi = PureState::basis(2, 0);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  const auto d = noiseless_decomposition(DensityOperator(2, m), psi);
  EXPECT_NEAR(d.fidelity, 0.5, 1e-14);
  Matrix perp = Matrix::Zero(4, 4);
  perp(3, 3) = 1.0;
  EXPECT_LT((d.rho_eps.matrix() - perp).norm(), 1e-14);
}

TEST(NoiselessDecomposition, ReconstructsProjectedPart) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState psi(3, random_vector(8, rng));
    const DensityOperator rho(3, random_density(3, rng));
    const auto d = noiseless_decomposition(rho, psi);
    const Matrix p0 = psi.amplitudes() * psi.amplitudes().adjoint();
    const Matrix lhs = (1.0 - d.fidelity) * d.rho_eps.matrix();
    const Matrix rhs = (Matrix::Identity(8, 8) - p0) * rho.matrix();
    EXPECT_LT((lhs - rhs).norm(), 1e-10);
    EXPECT_NEAR(std::abs(d.rho_eps.matrix().trace() - 1.0), 0.0, 1e-10);
    EXPECT_NEAR(d.fidelity, fidelity_with_pure(rho, psi), 1e-12);
  }
}

}  // namespace
}  // namespace symex
