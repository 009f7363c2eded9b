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

#include "mrucc/ansatz.hpp"
#include "mrucc/gradient.hpp"
#include "mrucc/fermion.hpp"
#include "mrucc/integrals.hpp"
#include "mrucc/operator.hpp"
#include "mrucc/profiles.hpp"
#include "test_support.hpp"

namespace mrucc {
namespace {

TEST(Schedule, Parse) {
  const auto s = parse_schedule("(adjacent, next_nearest)x3; budget=54");
  EXPECT_EQ(s.sweeps, (std::vector<int>{1, 2, 1, 2, 1, 2}));
  ASSERT_TRUE(s.budget.has_value());
  EXPECT_EQ(*s.budget, 54);
  EXPECT_EQ(parse_schedule("adjacent").sweeps, (std::vector<int>{1}));
  EXPECT_EQ(parse_schedule("adjacentx2,range3").sweeps, (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(parse_schedule("((adjacent)x2,next_nearest)x2").sweeps,
            (std::vector<int>{1, 1, 2, 1, 1, 2}));
}

TEST(Schedule, Errors) {
  for (const char* bad : {"", "diagonal", "(adjacent", "adjacent;budget=0", "adjacentx0",
                          "range0", "adjacent,", "adjacent; size=3", "adjacent junk"}) {
    EXPECT_THROW(parse_schedule(bad), ScheduleError) << bad;
  }
}

TEST(Schedule, ToStringRoundTrip) {
  for (const char* text : {"(adjacent,next_nearest)x13; budget=260", "adjacent", "adjacentx4",
                           "adjacent,next_nearest,range3"}) {
    const auto s = parse_schedule(text);
    EXPECT_EQ(to_string(s), text);
    EXPECT_EQ(parse_schedule(to_string(s)).sweeps, s.sweeps);
  }
}

TEST(Layout, SweepsAndBudget) {
  const auto l = build_layout(4, "adjacent,next_nearest");
  const std::vector<QubitPair> want = {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}};
  EXPECT_EQ(l.gates, want);
  EXPECT_EQ(build_layout(4, "adjacent,next_nearest; budget=2").gates.size(), 2u);
  EXPECT_THROW(build_layout(1, "adjacent"), ScheduleError);
  // Pairs beyond the register are skipped, not wrapped.
  EXPECT_TRUE(build_layout(3, "range5").gates.empty());
}

TEST(Layout, ProfileResourceCounts) {
  struct Want {
    const char* name;
    int qubits;
    std::size_t params;
  };
  for (const Want w : {Want{"LiH", 12, 54}, Want{"H6", 12, 260}, Want{"BeH2", 14, 198}}) {
    const auto& p = find_profile(w.name);
    EXPECT_EQ(p.n_qubits(), w.qubits);
    const auto l = build_layout(p.n_qubits(), p.schedule);
    EXPECT_EQ(l.parameter_count(), w.params) << w.name;
    EXPECT_EQ(cnot_count(l), 2 * w.params) << w.name;
  }
}

TEST(Layout, ZeroAnglesLeaveReference) {
  const auto l = build_layout(6, "(adjacent,next_nearest)x2");
  const auto ref = hf_state(6, {0, 1, 2});
  const auto s = prepare_state(l, std::vector<double>(l.parameter_count(), 0.0), ref);
  EXPECT_EQ(count_determinants(s), 1u);
  EXPECT_NEAR(std::abs(inner_product(ref, s)), 1.0, 1e-15);
  EXPECT_THROW(prepare_state(l, {0.1}, ref), std::invalid_argument);
}

TEST(Layout, ReversedNegatedUndoes) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ang(-1.0, 1.0);
  const auto l = build_layout(8, "(adjacent,next_nearest,range3)x2");
  std::vector<double> t(l.parameter_count());
  for (auto& x : t) x = ang(rng);
  const auto ref = hf_state(8, {0, 1, 2, 3});
  const auto s = prepare_state(l, t, ref);
  EXPECT_GT(count_determinants(s), 1u);
  std::vector<double> back(t.rbegin(), t.rend());
  for (auto& x : back) x = -x;
  const auto r = prepare_state(l.reversed(), back, s);
  EXPECT_NEAR(std::abs(inner_product(ref, r)), 1.0, 1e-12);
}

TEST(Layout, PreparedStateMatchesDenseProduct) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ang(-1.5, 1.5);
  const int n = 6;
  const auto l = build_layout(n, "adjacent,next_nearest,range3");
  std::vector<double> t(l.parameter_count());
  for (auto& x : t) x = ang(rng);
  const auto ref = hf_state(n, {0, 1, 2});
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(64);
  v(7) = 1.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    v = testing::dense_pnc(n, l.gates[k].first, l.gates[k].second, t[k]) * v;
  }
  const auto s = prepare_state(l, t, ref);
  for (int i = 0; i < 64; ++i) EXPECT_NEAR(std::abs(s[i] - v(i)), 0.0, 1e-13);
}

TEST(Layout, ConcatenateKeepsOrder) {
  const auto a = build_layout(4, "adjacent");
  const auto b = build_layout(4, "next_nearest");
  const auto c = AnsatzLayout::concatenate(a, b);
  EXPECT_EQ(c.parameter_count(), 5u);
  EXPECT_EQ(c.gates.front(), (QubitPair{0, 1}));
  EXPECT_EQ(c.gates.back(), (QubitPair{1, 3}));
  EXPECT_THROW(AnsatzLayout::concatenate(a, build_layout(5, "adjacent")), std::invalid_argument);
}

TEST(Stage1Gradient, AdjointMatchesFiniteDifference) {
  const auto spin = spin_expand(load_fcidump(testing::fixture("h4/H4_R1.00.fcidump")));
  const PauliOperator h(qubit_hamiltonian(spin));
  const auto l = build_layout(8, "(adjacent,next_nearest)x2");
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> ang(-0.8, 0.8);
  const auto ref = hf_state(8, default_occupation(spin));
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> t(l.parameter_count());
    for (auto& x : t) x = ang(rng);
    const auto eg = stage1_energy_gradient(h, l, t, ref);
    const auto fd = stage1_gradient_fd(h, l, t, ref, 1e-5);
    EXPECT_NEAR(eg.energy, h.expectation(prepare_state(l, t, ref)), 1e-12);
    for (std::size_t k = 0; k < t.size(); ++k) EXPECT_NEAR(eg.gradient[k], fd[k], 1e-8);
  }
}

TEST(Stage1Gradient, RejectsNonHermitian) {
  const auto l = build_layout(2, "adjacent");
  EXPECT_THROW(stage1_gradient(PauliSum(2, {{"XY", Complex(0, 1)}}), l, {0.1}, hf_state(2, {0})),
               std::invalid_argument);
}

}  // namespace
}  // namespace mrucc
