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


#include <set>

#include <gtest/gtest.h>

#include "symex/errors.hpp"
#include "symex/hubbard.hpp"
#include "symex/simulator.hpp"
#include "test_util.hpp"

namespace symex {
namespace {

using namespace symex::testing;

// exp(-i a K) for Hermitian K via its eigendecomposition.
Matrix expm_herm(const Matrix& k, double a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(k);
  Vector phases(k.rows());
  for (Eigen::Index i = 0; i < k.rows(); ++i) phases(i) = std::polar(1.0, -a * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Jordan-Wigner annihilation operator on orbital j of an n-qubit register;
// an occupied orbital has its bit set.
Matrix annihilate(std::size_t j, std::size_t n) {
  Matrix lower(2, 2);
  lower << 0, 1, 0, 0;
  Matrix out = embed(lower, {j}, n);
  for (std::size_t k = 0; k < j; ++k) out = embed(pauli2('Z'), {k}, n) * out;
  return out;
}

// Dense second-quantised Hubbard Hamiltonian built from fermion operators.
Matrix hubbard_oracle(const LatticeSpec& spec) {
  const std::size_t s = spec.sites(), n = spec.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  Matrix h = Matrix::Zero(dim, dim);
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      if (!lattice_neighbours(spec, a, b)) continue;
      for (std::size_t off : {std::size_t{0}, s}) {
        const Matrix ca = annihilate(a + off, n), cb = annihilate(b + off, n);
        h -= spec.t * (ca.adjoint() * cb + cb.adjoint() * ca);
      }
    }
  }
  for (std::size_t a = 0; a < s; ++a) {
    const Matrix cu = annihilate(a, n), cd_ = annihilate(a + s, n);
    h += spec.u * (cu.adjoint() * cu) * (cd_.adjoint() * cd_);
  }
  return h;
}

TEST(Lattice, ParseAndPrint) {
  const auto l = LatticeSpec::parse("2x3");
  EXPECT_EQ(l.rows, 2u);
  EXPECT_EQ(l.cols, 3u);
  EXPECT_EQ(l.num_qubits(), 12u);
  EXPECT_EQ(l.str(), "2x3");
  EXPECT_THROW(LatticeSpec::parse("2by2"), Error);
  EXPECT_THROW(LatticeSpec::parse("0x2"), Error);
}

TEST(Lattice, SnakeOrderWalksNeighbours) {
  for (const char* text : {"2x2", "2x3", "1x4"}) {
    const auto l = LatticeSpec::parse(text);
    std::set<std::array<std::size_t, 2>> seen;
    for (std::size_t k = 0; k < l.sites(); ++k) {
      seen.insert(snake_site(l, k));
      if (k + 1 < l.sites()) EXPECT_TRUE(lattice_neighbours(l, k, k + 1)) << text << " " << k;
    }
    EXPECT_EQ(seen.size(), l.sites());
  }
  const auto l = LatticeSpec::parse("2x2");
  EXPECT_TRUE(lattice_neighbours(l, 0, 3));
  EXPECT_FALSE(lattice_neighbours(l, 0, 2));
}

TEST(BuildCircuit, GateCounts) {
  const auto c8 = build_circuit(LatticeSpec::parse("2x2"), 5, 1);
  const auto c12 = build_circuit(LatticeSpec::parse("2x3"), 5, 1);
  EXPECT_EQ(c8.num_qubits(), 8u);
  EXPECT_EQ(c8.gates.size(), 144u);
  EXPECT_EQ(c12.num_qubits(), 12u);
  EXPECT_EQ(c12.gates.size(), 336u);
  for (std::size_t s = 1; s <= 6; ++s) {
    EXPECT_EQ(expected_gate_count(s, 3), 3 * (2 * s * s - s) + s);
  }
  EXPECT_EQ(c8.noise_locations(NoiseKind::Depolarising2Q), 144u);
  EXPECT_EQ(c8.noise_locations(NoiseKind::BitFlip1Q), 288u);
}

TEST(BuildCircuit, Deterministic) {
  const auto spec = LatticeSpec::parse("2x2");
  const auto a = build_circuit(spec, 5, 42), b = build_circuit(spec, 5, 42);
  const auto c = build_circuit(spec, 5, 43);
  EXPECT_EQ(a.params, b.params);
  EXPECT_NE(a.params, c.params);
  for (double p : a.params) {
    EXPECT_GE(p, 0.0);
    EXPECT_LT(p, 2 * M_PI);
  }
}

TEST(BuildCircuit, RejectsLargeLattices) {
  try {
    build_circuit(LatticeSpec::parse("3x3"), 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedLattice);
  }
}

TEST(BuildCircuit, JsonRoundTrip) {
  const auto c = build_circuit(LatticeSpec::parse("2x2"), 2, 5);
  const auto back = circuit_from_json(to_json(c));
  EXPECT_EQ(back.params, c.params);
  ASSERT_EQ(back.gates.size(), c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    EXPECT_EQ(back.gates[i].kind, c.gates[i].kind);
    EXPECT_EQ(back.gates[i].qubits, c.gates[i].qubits);
  }
  EXPECT_THROW(circuit_from_json(nlohmann::json{{"lattice", 3}}), Error);
}

TEST(Gates, MatchExponentialOracles) {
  for (double theta : {0.0, 0.3, 2.1, 5.9}) {
    const Matrix k = (kron_word("XX") + kron_word("YY")) / 2.0;
    EXPECT_LT((hopping_unitary(theta) - expm_herm(k, theta)).norm(), 1e-12);
    // n_a n_b = (I - Z_a)(I - Z_b)/4
    const Matrix nn = (kron_word("II") - kron_word("ZI") - kron_word("IZ") + kron_word("ZZ")) / 4.0;
    EXPECT_LT((onsite_unitary(theta) - expm_herm(nn, theta)).norm(), 1e-12);
  }
  // Fermionic swap: exchanges the two modes with a sign on double occupancy.
  const Matrix c0 = annihilate(0, 2), c1 = annihilate(1, 2);
  const Matrix f = fswap_unitary();
  EXPECT_LT((f * c0 * f.adjoint() - c1).norm(), 1e-12);
  EXPECT_LT((f * c1 * f.adjoint() - c0).norm(), 1e-12);
}

TEST(Gates, ConserveParities) {
  const auto spec = LatticeSpec::parse("2x2");
  const auto syms = symmetries(spec);
  const Matrix up = syms.g_up.to_matrix(), down = syms.g_down.to_matrix(),
               tot = syms.g_tot.to_matrix();
  const auto c = build_circuit(spec, 1, 3);
  for (const auto& g : c.gates) {
    const Matrix u = embed(g.unitary(), {g.qubits[0], g.qubits[1]}, spec.num_qubits());
    EXPECT_LT((u * tot - tot * u).norm(), 1e-10);
    EXPECT_LT((u * up - up * u).norm(), 1e-10);
    EXPECT_LT((u * down - down * u).norm(), 1e-10);
    if (g.kind == GateKind::Onsite) {
      EXPECT_EQ(g.qubits[1], g.qubits[0] + spec.sites());
    } else {
      EXPECT_EQ(g.qubits[0] < spec.sites(), g.qubits[1] < spec.sites());
    }
  }
}

TEST(IdealState, ZeroLayersGivesInitialState) {
  const auto spec = LatticeSpec::parse("2x2");
  const auto c = build_circuit(spec, 0, 1);
  const auto psi = ideal_state(c);
  EXPECT_NEAR(std::norm(psi.amplitudes()(static_cast<Eigen::Index>(initial_basis_index(spec)))), 1.0, 1e-14);
  // Two fermions per spin on even snake positions.
  EXPECT_EQ(initial_basis_index(spec), 0b01010101u);
}

TEST(IdealState, StabilisedBySymmetries) {
  for (const char* text : {"2x2", "2x3"}) {
    const auto spec = LatticeSpec::parse(text);
    const auto psi = ideal_state(build_circuit(spec, 2, 9));
    const auto syms = symmetries(spec);
    for (const auto& g : {syms.g_up, syms.g_down, syms.g_tot}) {
      EXPECT_NEAR(psi.expect(g), 1.0, 1e-10) << text << " " << g.str();
    }
  }
}

TEST(IdealState, NoiselessSimulationHasUnitFidelity) {
  const auto c = build_circuit(LatticeSpec::parse("2x2"), 5, 2);
  const auto r = simulate(c, NoiseKind::Depolarising2Q, 0.0);
  EXPECT_NEAR(fidelity_with_pure(r.rho, ideal_state(c)), 1.0, 1e-10);
}

TEST(Hamiltonian, SingleSite) {
  LatticeSpec one{1, 1};
  const auto h = hamiltonian(one);
  EXPECT_EQ(h.terms().size(), 4u);
  EXPECT_NEAR(PureState::basis(2, 0).expect(h), 0.0, 1e-14);
  EXPECT_NEAR(PureState::basis(2, 3).expect(h), 2.0, 1e-14);
  EXPECT_NEAR(PureState::basis(2, 1).expect(h), 0.0, 1e-14);
}

TEST(Hamiltonian, MatchesFermionOracle) {
  for (const char* text : {"1x2", "2x2", "1x3"}) {
    auto spec = LatticeSpec::parse(text);
    spec.t = 0.7;
    spec.u = 1.9;
    EXPECT_LT((hamiltonian(spec).to_matrix() - hubbard_oracle(spec)).norm(), 1e-12) << text;
  }
}

TEST(Hamiltonian, EnergyObservableIsTraceless) {
  const auto spec = LatticeSpec::parse("2x2");
  const Matrix h = hamiltonian(spec).to_matrix();
  const Matrix e = energy_observable(spec).to_matrix();
  const double shift = h.trace().real() / static_cast<double>(h.rows());
  EXPECT_NEAR(e.trace().real(), 0.0, 1e-10);
  EXPECT_LT((h - e - shift * Matrix::Identity(h.rows(), h.cols())).norm(), 1e-10);
}

TEST(Hamiltonian, CommutesWithSymmetries) {
  const auto spec = LatticeSpec::parse("2x2");
  const Matrix h = hamiltonian(spec).to_matrix();
  const auto syms = symmetries(spec);
  for (const auto& g : {syms.g_up, syms.g_down, syms.g_tot}) {
    const Matrix gm = g.to_matrix();
    EXPECT_LT((h * gm - gm * h).norm(), 1e-10);
  }
}

TEST(Symmetries, SignsFollowParticleCount) {
  const auto s4 = symmetries(LatticeSpec::parse("2x2"));
  EXPECT_EQ(s4.g_up.str(), "+ZZZZIIII");
  EXPECT_EQ(s4.g_down.str(), "+IIIIZZZZ");
  const auto s6 = symmetries(LatticeSpec::parse("2x3"));
  EXPECT_EQ(s6.g_up.sign(), -1);
  EXPECT_EQ(s6.g_up.z_mask(), 0b111111u);
  for (const auto& s : {s4, s6}) {
    EXPECT_EQ(s.g_tot, pauli_mul(s.g_up, s.g_down));
    EXPECT_TRUE(s.group().is_group());
  }
}

TEST(Symmetries, SpinExchangeSwapsBlocks) {
  const auto spec = LatticeSpec::parse("2x3");
  const auto perm = spin_exchange(spec);
  ASSERT_EQ(perm.size(), 12u);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_EQ(perm[k], k + 6);
    EXPECT_EQ(perm[k + 6], k);
  }
}

TEST(EnergyFilter, AcceptsSomeSeeds) {
  const auto spec = LatticeSpec::parse("2x2");
  const auto h = energy_observable(spec);
  int accepted = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    if (std::abs(ideal_state(build_circuit(spec, 5, seed)).expect(h)) > 0.5) ++accepted;
  }
  EXPECT_GT(accepted, 0);
  EXPECT_LT(accepted, 50);
}

}  // namespace
}  // namespace symex
