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

#pragma once

#include <string>
#include <vector>

#include "mrucc/integrals.hpp"
#include "mrucc/pauli.hpp"

namespace mrucc {

/// One creation (a_p^dagger) or annihilation (a_p) operator.
struct LadderOp {
  int mode = 0;
  bool creation = false;

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

inline LadderOp cre(int p) { return {p, true}; }
inline LadderOp ann(int p) { return {p, false}; }

/// Coefficient times an ordered product of ladder operators.
struct FermionTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<LadderOp> factors;
};

class FermionSum {
 public:
  explicit FermionSum(int n_spin_orbitals);

  int n_spin_orbitals() const { return n_; }
  const std::vector<FermionTerm>& terms() const { return terms_; }

  /// Throws std::out_of_range when a factor addresses a mode >= n.
  void add(Complex coefficient, std::vector<LadderOp> factors);
  void add(const FermionTerm& term) { add(term.coefficient, term.factors); }

  /// Reversed factor order, creation/annihilation swapped, coefficient conjugated.
  FermionSum adjoint() const;

  FermionSum& operator+=(const FermionSum& other);
  FermionSum& operator-=(const FermionSum& other);

 private:
  int n_;
  std::vector<FermionTerm> terms_;
};

/// a_p^dagger -> (X_p - iY_p)/2 Z_{p-1}...Z_0, a_p -> adjoint; qubit p is mode p.
PauliSum jordan_wigner(const FermionSum& f, double threshold = kDefaultTruncation);

/// sum h_pq a_p^dagger a_q + 1/2 sum <pq|rs> a_p^dagger a_q^dagger a_s a_r + e_core.
FermionSum build_hamiltonian(const SpinIntegrals& spin);

/// Spin-expands with the given ordering, then builds the Hamiltonian.
FermionSum build_hamiltonian(const MolecularSystem& sys,
                             SpinOrdering ordering = SpinOrdering::kInterleaved);

/// Convenience: JW-mapped molecular Hamiltonian.
PauliSum qubit_hamiltonian(const SpinIntegrals& spin);

/// sum_p a_p^dagger a_p after JW.
PauliSum number_operator(int n_qubits);

enum class ExcitationKind { kSingle, kDouble };

/**
 * @brief One anti-Hermitian UCC generator T_k - T_k^dagger.
 *
 * Singles: T = a_m^dagger a_i. Doubles: T = a_m^dagger a_n^dagger a_j a_i with
 * m < n particles and i < j holes.
 */
struct ClusterGenerator {
  int id = 0;
  ExcitationKind kind = ExcitationKind::kSingle;
  std::vector<int> particles;  // m or (m, n)
  std::vector<int> holes;      // i or (i, j)
  PauliSum pauli_form{1};

  std::string describe() const;
};

struct ClusterPool {
  int n_spin_orbitals = 0;
  std::vector<ClusterGenerator> generators;

  std::size_t size() const { return generators.size(); }
  std::size_t singles() const;
  std::size_t doubles() const;

  /// A(c) = sum_k c_k A_k.
  PauliSum combine(const std::vector<double>& amplitudes) const;
};

/// T_k as a FermionSum (unit amplitude), before anti-hermitization.
FermionSum excitation_operator(int n_spin_orbitals, const ClusterGenerator& gen);

/**
 * @brief Spin-conserving singles and doubles relative to `occupied`.
 *
 * Ordered singles first, then doubles, each lexicographically by
 * (holes, particles). Throws if the particle or hole set is empty.
 */
ClusterPool build_uccsd_pool(int n_spin_orbitals, const std::vector<int>& occupied,
                             SpinOrdering ordering = SpinOrdering::kInterleaved);

}  // namespace mrucc
