// Copyright 2026 The mrucc Authors
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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mrucc/fermion.hpp"
#include "mrucc/integrals.hpp"
#include "mrucc/state.hpp"
#include "test_support.hpp"

namespace mrucc {
namespace {

using testing::annihilator;

Eigen::MatrixXcd dense(const PauliSum& s) { return to_matrix(s); }

TEST(JordanWigner, SingleCreation) {
  FermionSum f(1);
  f.add(1.0, {cre(0)});
  const auto p = jordan_wigner(f);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient("X"), Complex(0.5));
  EXPECT_EQ(p.coefficient("Y"), Complex(0.0, -0.5));
}

TEST(JordanWigner, NumberOperator) {
  FermionSum f(1);
  f.add(1.0, {cre(0), ann(0)});
  const auto p = jordan_wigner(f);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient("I"), Complex(0.5));
  EXPECT_EQ(p.coefficient("Z"), Complex(-0.5));
}

TEST(JordanWigner, CanonicalAnticommutation) {
  for (int n = 1; n <= 6; ++n) {
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        FermionSum f(n);
        f.add(1.0, {ann(p), cre(q)});
        f.add(1.0, {cre(q), ann(p)});
        const auto s = jordan_wigner(f);
        if (p == q) {
          ASSERT_EQ(s.size(), 1u);
          EXPECT_NEAR(std::abs(s.coefficient(PauliLabel{0, 0, n}) - Complex(1.0)), 0.0, 1e-14);
        } else {
          EXPECT_TRUE(s.empty()) << "p=" << p << " q=" << q;
        }
        FermionSum g(n);
        g.add(1.0, {ann(p), ann(q)});
        g.add(1.0, {ann(q), ann(p)});
        EXPECT_TRUE(jordan_wigner(g).empty());
      }
    }
  }
}

TEST(JordanWigner, LadderMatricesMatchOccupationOracle) {
  const int n = 4;
  for (int p = 0; p < n; ++p) {
    FermionSum f(n);
    f.add(1.0, {ann(p)});
    const Eigen::MatrixXcd lhs = dense(jordan_wigner(f));
    const Eigen::MatrixXcd rhs = annihilator(n, p).cast<Complex>();
    EXPECT_LT((lhs - rhs).norm(), 1e-14) << "p=" << p;
  }
}

TEST(JordanWignerProperty, PreservesAdjoint) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> mode(0, 4), len(1, 4), flag(0, 1);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 30; ++trial) {
    FermionSum f(5);
    for (int t = 0; t < 4; ++t) {
      std::vector<LadderOp> ops;
      const int l = len(rng);
      for (int k = 0; k < l; ++k) ops.push_back({mode(rng), flag(rng) == 1});
      f.add(Complex(nd(rng), nd(rng)), ops);
    }
    const auto lhs = jordan_wigner(f.adjoint());
    const auto rhs = jordan_wigner(f).adjoint();
    EXPECT_LT((dense(lhs) - dense(rhs)).norm(), 1e-10);
  }
}

TEST(Hamiltonian, SingleOrbitalToy) {
  MolecularSystem sys = MolecularSystem::zeros(1, 1, 1);
  sys.one(0, 0) = -0.7;
  sys.e_core = 0.25;
  const auto spin = spin_expand(sys);
  const auto f = build_hamiltonian(spin);
  const Eigen::MatrixXcd h = dense(jordan_wigner(f));
  // Two spin orbitals: energies 0.25 + (-0.7) * occupation.
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(h(j, j).real(), 0.25 - 0.7 * std::popcount(static_cast<unsigned>(j)), 1e-14);
  }
}

class FixtureHamiltonian : public ::testing::TestWithParam<std::string> {};

TEST_P(FixtureHamiltonian, MatchesSecondQuantizedOracle) {
  const auto sys = load_fcidump(testing::fixture(GetParam()));
  const auto spin = spin_expand(sys);
  const PauliSum h = qubit_hamiltonian(spin);
  EXPECT_TRUE(is_hermitian(h));
  const Eigen::MatrixXd oracle = testing::dense_hamiltonian(spin);
  EXPECT_LT((to_matrix(h) - oracle.cast<Complex>()).norm(), 1e-10);
}

TEST_P(FixtureHamiltonian, ConservesParticleNumber) {
  const auto spin = spin_expand(load_fcidump(testing::fixture(GetParam())));
  const PauliSum h = qubit_hamiltonian(spin);
  EXPECT_TRUE(commutator(h, number_operator(h.n_qubits())).empty());
}

TEST_P(FixtureHamiltonian, HfExpectationMatchesIntegralFormula) {
  const auto spin = spin_expand(load_fcidump(testing::fixture(GetParam())));
  const auto occ = default_occupation(spin);
  const PauliSum h = qubit_hamiltonian(spin);
  EXPECT_NEAR(expectation(hf_state(spin.n_spin_orbitals, occ), h), hf_energy(spin, occ), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureHamiltonian,
                         ::testing::Values("h2/H2_R0.74.fcidump", "h2/H2_R1.50.fcidump",
                                           "h4/H4_R1.00.fcidump"));

TEST(Hamiltonian, BlockDiagonalAcrossHammingWeight) {
  const auto spin = spin_expand(load_fcidump(testing::fixture("h2/H2_R0.74.fcidump")));
  const Eigen::MatrixXcd h = to_matrix(qubit_hamiltonian(spin));
  for (int i = 0; i < h.rows(); ++i) {
    for (int j = 0; j < h.cols(); ++j) {
      if (std::popcount(static_cast<unsigned>(i)) != std::popcount(static_cast<unsigned>(j))) {
        EXPECT_EQ(std::abs(h(i, j)), 0.0);
      }
    }
  }
}

// Brute-force count of spin-conserving excitations from the HF determinant.
std::pair<int, int> brute_force_pool(int n_spatial, int n_electrons) {
  const int n = 2 * n_spatial;
  auto spin = [](int q) { return q % 2; };
  std::vector<int> occ, vir;
  for (int q = 0; q < n; ++q) (q < n_electrons ? occ : vir).push_back(q);
  int singles = 0, doubles = 0;
  for (int i : occ) {
    for (int m : vir) singles += spin(i) == spin(m);
  }
  for (int i : occ) {
    for (int j : occ) {
      if (j <= i) continue;
      for (int m : vir) {
        for (int k : vir) {
          if (k <= m) continue;
          doubles += spin(i) + spin(j) == spin(m) + spin(k);
        }
      }
    }
  }
  return {singles, doubles};
}

TEST(ClusterPool, FourOrbitalExample) {
  const auto pool = build_uccsd_pool(4, {0, 1});
  ASSERT_EQ(pool.singles(), 2u);
  ASSERT_EQ(pool.doubles(), 1u);
  std::set<std::pair<int, int>> singles;
  for (const auto& g : pool.generators) {
    if (g.kind == ExcitationKind::kSingle) singles.insert({g.holes[0], g.particles[0]});
    if (g.kind == ExcitationKind::kDouble) {
      EXPECT_EQ(g.holes, (std::vector<int>{0, 1}));
      EXPECT_EQ(g.particles, (std::vector<int>{2, 3}));
    }
  }
  EXPECT_EQ(singles, (std::set<std::pair<int, int>>{{0, 2}, {1, 3}}));
}

TEST(ClusterPool, CountsMatchBruteForce) {
  struct Case {
    int n_spatial, n_electrons;
    std::size_t total;
  };
  // LiH, H6, BeH2.
  for (const Case c : {Case{6, 4, 92}, Case{6, 6, 117}, Case{7, 6, 204}}) {
    const auto occ = default_occupation(c.n_spatial, c.n_electrons, 0, SpinOrdering::kInterleaved);
    const auto pool = build_uccsd_pool(2 * c.n_spatial, occ);
    const auto [s, d] = brute_force_pool(c.n_spatial, c.n_electrons);
    EXPECT_EQ(pool.singles(), static_cast<std::size_t>(s));
    EXPECT_EQ(pool.doubles(), static_cast<std::size_t>(d));
    EXPECT_EQ(pool.size(), c.total);
  }
}

TEST(ClusterPool, LiHSplit) {
  const auto pool = build_uccsd_pool(12, {0, 1, 2, 3});
  EXPECT_EQ(pool.singles(), 16u);
  EXPECT_EQ(pool.doubles(), 76u);
}

TEST(ClusterPool, GeneratorsAreAntiHermitianAndOrdered) {
  const auto pool = build_uccsd_pool(8, {0, 1, 2, 3});
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const auto& g = pool.generators[k];
    EXPECT_EQ(g.id, static_cast<int>(k));
    EXPECT_TRUE(is_anti_hermitian(g.pauli_form)) << g.describe();
    EXPECT_FALSE(g.pauli_form.empty());
    if (k > 0 && pool.generators[k - 1].kind == ExcitationKind::kDouble) {
      EXPECT_EQ(g.kind, ExcitationKind::kDouble);
    }
  }
}

TEST(ClusterPool, GeneratorMatchesDenseExcitation) {
  const int n = 6;
  const auto pool = build_uccsd_pool(n, {0, 1});
  std::vector<Eigen::MatrixXd> a;
  for (int p = 0; p < n; ++p) a.push_back(annihilator(n, p));
  for (const auto& g : pool.generators) {
    Eigen::MatrixXd t;
    if (g.kind == ExcitationKind::kSingle) {
      t = a[g.particles[0]].transpose() * a[g.holes[0]];
    } else {
      t = a[g.particles[0]].transpose() * a[g.particles[1]].transpose() * a[g.holes[1]] *
          a[g.holes[0]];
    }
    const Eigen::MatrixXd expected = t - t.transpose();
    EXPECT_LT((to_matrix(g.pauli_form) - expected.cast<Complex>()).norm(), 1e-12)
        << g.describe();
  }
}

TEST(ClusterPool, EmptyParticleOrHoleSetThrows) {
  EXPECT_THROW(build_uccsd_pool(4, {}), std::invalid_argument);
  EXPECT_THROW(build_uccsd_pool(4, {0, 1, 2, 3}), std::invalid_argument);
}

}  // namespace
}  // namespace mrucc
