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

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mrucc/operator.hpp"
#include "mrucc/pauli.hpp"

namespace mrucc {

/// Largest sector the dense FCI solve accepts by default.
inline constexpr std::uint64_t kDenseSectorCap = 5000;

/// Raised when an operator couples its sector to another particle number.
class SectorLeakError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// C(n_qubits, n_electrons). Throws on negative or oversized counts.
std::uint64_t sector_dimension(int n_qubits, int n_electrons);

/// Basis states of fixed Hamming weight, ascending.
class SectorBasis {
 public:
  SectorBasis(int n_qubits, int n_electrons);

  int n_qubits() const { return n_qubits_; }
  int n_electrons() const { return n_electrons_; }
  std::size_t size() const { return states_.size(); }
  const std::vector<std::uint64_t>& states() const { return states_; }

  /// Position of a basis index in the sector, or -1.
  std::int64_t position(std::uint64_t state) const;

 private:
  int n_qubits_;
  int n_electrons_;
  std::vector<std::uint64_t> states_;
  std::vector<std::int32_t> lookup_;  // 2^n entries
};

/**
 * @brief Sparse matrix of a number-conserving operator inside one sector.
 *
 * Applied to a full-register vector it reads only sector amplitudes and
 * writes zeros elsewhere, so callers must keep states inside the sector.
 */
class SectorOperator final : public LinearOperator {
 public:
  using Matrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

  /// Throws SectorLeakError if an element leaving the sector exceeds leak_tol.
  SectorOperator(const PauliSum& op, const SectorBasis& basis, double leak_tol = 1e-10);

  int n_qubits() const override { return basis_.n_qubits(); }
  void apply(std::span<const Complex> in, std::span<Complex> out) const override;

  const SectorBasis& basis() const { return basis_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  SectorBasis basis_;
  Matrix matrix_;
};

/// Dense real-symmetric sector matrix M[a][b] = <a|H|b>. Throws on leakage
/// or if any imaginary part exceeds 1e-12.
Eigen::MatrixXd build_sector_matrix(const PauliSum& hamiltonian, const SectorBasis& basis);

using RealSparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Sparse sector matrix of a real number-conserving operator (any symmetry).
/// Throws on leakage or on imaginary parts above 1e-12.
RealSparse real_sector_matrix(const PauliSum& op, const SectorBasis& basis);

/// Sector amplitudes of a real state. Throws if any imaginary part or any
/// weight outside the sector exceeds 1e-12.
Eigen::VectorXd gather_real(const Statevector& state, const SectorBasis& basis);
Statevector scatter(const Eigen::VectorXd& amplitudes, const SectorBasis& basis);

/**
 * @brief e^{A} v for a real antisymmetric sector matrix.
 *
 * Taylor series in s = ceil(||A||_1) steps; ||A||_1 bounds the spectral
 * norm of an antisymmetric matrix, so every step has norm <= 1.
 */
Eigen::VectorXd sector_exponential(const RealSparse& a, const Eigen::VectorXd& v,
                                   double tol = 1e-12, int max_terms_per_step = 200);

struct FciResult {
  double energy = 0.0;
  Eigen::VectorXd vector;  // in sector coordinates
  double residual = 0.0;   // ||Hv - Ev||
  SectorBasis basis;

  /// Ground vector embedded into the full register.
  Statevector full_state() const;
};

/// Lowest eigenpair in the n_electrons sector by dense symmetric solve.
FciResult fci_ground_energy(const PauliSum& hamiltonian, int n_electrons,
                            std::uint64_t dense_cap = kDenseSectorCap);

}  // namespace mrucc
