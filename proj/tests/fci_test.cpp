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

#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <random>

#include "mrucc/eigensolver.hpp"
#include "mrucc/fci.hpp"
#include "mrucc/fermion.hpp"
#include "mrucc/integrals.hpp"
#include "test_support.hpp"

namespace mrucc {
namespace {

TEST(Sector, Dimensions) {
  EXPECT_EQ(sector_dimension(12, 4), 495u);
  EXPECT_EQ(sector_dimension(12, 6), 924u);
  EXPECT_EQ(sector_dimension(14, 6), 3003u);
  EXPECT_EQ(sector_dimension(4, 0), 1u);
  const SectorBasis b(12, 6);
  EXPECT_EQ(b.size(), 924u);
  for (std::size_t i = 0; i < b.size(); ++i) {
    EXPECT_EQ(std::popcount(b.states()[i]), 6);
    EXPECT_EQ(b.position(b.states()[i]), static_cast<std::int64_t>(i));
    if (i) EXPECT_LT(b.states()[i - 1], b.states()[i]);
  }
  EXPECT_EQ(b.position(0b1), -1);
  EXPECT_THROW(SectorBasis(4, 5), std::invalid_argument);
}

TEST(Sector, SliceMatchesDenseMatrix) {
  const auto spin = spin_expand(load_fcidump(testing::fixture("h4/H4_R1.00.fcidump")));
  const PauliSum h = qubit_hamiltonian(spin);
  const Eigen::MatrixXd dense = testing::dense_hamiltonian(spin);
  const SectorBasis b(8, 4);
  const Eigen::MatrixXd slice = build_sector_matrix(h, b);
  const auto sparse = real_sector_matrix(h, b);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double want = dense(static_cast<Eigen::Index>(b.states()[i]),
                                static_cast<Eigen::Index>(b.states()[j]));
      ASSERT_NEAR(slice(i, j), want, 1e-12);
      ASSERT_NEAR(sparse.coeff(i, j), want, 1e-12);
    }
  }
}

TEST(Sector, LeakingOperatorIsRejected) {
  const SectorBasis b(4, 2);
  EXPECT_THROW(SectorOperator(PauliSum(4, {{"XIII", 1.0}}), b), SectorLeakError);
  EXPECT_NO_THROW(SectorOperator(PauliSum(4, {{"XXII", 1.0}, {"YYII", 1.0}}), b));
}

TEST(Sector, GatherScatterRoundTrip) {
  const SectorBasis b(6, 3);
  Eigen::VectorXd v = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(b.size()), -1, 1);
  v.normalize();
  const auto s = scatter(v, b);
  EXPECT_LT(s.weight_outside_sector(3), 1e-30);
  EXPECT_LT((gather_real(s, b) - v).norm(), 1e-15);
  EXPECT_THROW(gather_real(hf_state(6, {0}), b), SectorLeakError);
}

TEST(Sector, ExponentialMatchesDense) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  const int dim = 20;
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < i; ++j)
      if (nd(rng) > 0.5) {
        k(i, j) = 0.7 * nd(rng);
        k(j, i) = -k(i, j);
      }
  Eigen::VectorXd v(dim);
  for (auto& x : v) x = nd(rng);
  v.normalize();
  const Eigen::VectorXd ref = k.exp() * v;
  const RealSparse ks = k.sparseView();
  const Eigen::VectorXd out = sector_exponential(ks, v);
  EXPECT_NEAR(out.norm(), 1.0, 1e-12);
  EXPECT_LT((out - ref).norm(), 1e-11);
}

TEST(Eigensolver, LowestPairOfKnownMatrix) {
  Eigen::MatrixXd m(3, 3);
  m << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  const auto p = lowest_eigenpair(m);
  EXPECT_NEAR(p.value, 2.0 - std::sqrt(2.0), 1e-13);
  EXPECT_LT((m * p.vector - p.value * p.vector).norm(), 1e-12);
}

TEST(Fci, NonInteractingIsSumOfLowestLevels) {
  auto sys = MolecularSystem::zeros(4, 4);
  const double eps[] = {-1.3, -0.4, 0.2, 0.9};
  for (int p = 0; p < 4; ++p) sys.one(p, p) = eps[p];
  sys.e_core = 0.5;
  const auto r = fci_ground_energy(qubit_hamiltonian(spin_expand(sys)), 4);
  EXPECT_NEAR(r.energy, 0.5 + 2 * (-1.3 - 0.4), 1e-12);
  EXPECT_LT(r.residual, 1e-10);
}

class ReferenceFci : public ::testing::TestWithParam<std::string> {};

TEST_P(ReferenceFci, MatchesExternalValue) {
  for (const auto& pt : testing::reference_points(GetParam())) {
    const auto sys = load_fcidump(testing::fixture(GetParam() + "/" + pt.file));
    const auto spin = spin_expand(sys);
    const auto r = fci_ground_energy(qubit_hamiltonian(spin), sys.n_electrons);
    EXPECT_NEAR(r.energy, pt.e_fci, 1e-7) << pt.file;
    EXPECT_LE(r.energy, hf_energy(spin, default_occupation(spin)) + 1e-12);
    EXPECT_NEAR(r.full_state().norm(), 1.0, 1e-12);
  }
}

INSTANTIATE_TEST_SUITE_P(Molecules, ReferenceFci,
                         ::testing::Values("h2", "h4", "lih", "h6", "beh2"));

TEST(Fci, MatchesFullDenseSpectrumOnSmallSystem) {
  const auto sys = load_fcidump(testing::fixture("h4/H4_R1.00.fcidump"));
  const auto spin = spin_expand(sys);
  const Eigen::MatrixXd dense = testing::dense_hamiltonian(spin);
  // Lowest eigenvalue among 4-electron determinants of the oracle matrix.
  std::vector<Eigen::Index> idx;
  for (Eigen::Index j = 0; j < dense.rows(); ++j) {
    if (std::popcount(static_cast<unsigned>(j)) == 4) idx.push_back(j);
  }
  Eigen::MatrixXd block(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) block(a, b) = dense(idx[a], idx[b]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
  const auto r = fci_ground_energy(qubit_hamiltonian(spin), 4);
  EXPECT_NEAR(r.energy, es.eigenvalues()(0), 1e-10);
}

TEST(Fci, OrderingInvariance) {
  const auto sys = load_fcidump(testing::fixture("lih/LiH_R1.59.fcidump"));
  const auto a = fci_ground_energy(qubit_hamiltonian(spin_expand(sys, SpinOrdering::kInterleaved)), 4);
  const auto b = fci_ground_energy(qubit_hamiltonian(spin_expand(sys, SpinOrdering::kBlocked)), 4);
  EXPECT_NEAR(a.energy, b.energy, 1e-9);
}

}  // namespace
}  // namespace mrucc
